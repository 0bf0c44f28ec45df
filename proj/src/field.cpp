// Copyright 2026 The toybls Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//    http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toybls/field.hpp"

#include <cassert>

#include "toybls/errors.hpp"

namespace toybls {

static Int reduced(Int v, const Int& p)
{
    v %= p;
    if (v < 0) {
        v += p;
    }
    return v;
}

Fp::Fp(const CurveParams& cp, Int v) : cp_(&cp), v_(reduced(std::move(v), cp.p)) {}

Fp Fp::operator-() const
{
    return Fp(*cp_, v_ == 0 ? Int(0) : cp_->p - v_);
}

Fp operator+(const Fp& a, const Fp& b)
{
    assert(a.cp_->p == b.cp_->p);
    Int s = a.v_ + b.v_;
    if (s >= a.cp_->p) {
        s -= a.cp_->p;
    }
    return Fp(*a.cp_, std::move(s));
}

Fp operator-(const Fp& a, const Fp& b)
{
    assert(a.cp_->p == b.cp_->p);
    Int s = a.v_ - b.v_;
    if (s < 0) {
        s += a.cp_->p;
    }
    return Fp(*a.cp_, std::move(s));
}

Fp operator*(const Fp& a, const Fp& b)
{
    assert(a.cp_->p == b.cp_->p);
    return Fp(*a.cp_, a.v_ * b.v_);
}

Fp operator/(const Fp& a, const Fp& b)
{
    return a * fp_inv(b);
}

Fp fp_inv(const Fp& a)
{
    if (a.is_zero()) {
        raise(Errc::division_by_zero, "inverse of zero in F_p");
    }
    return Fp(a.params(), mod_inverse(a.value(), a.params().p));
}

Fp fp_pow(const Fp& a, const Int& e)
{
    return Fp(a.params(), mod_pow(a.value(), e, a.params().p));
}

std::optional<Fp> fp_sqrt(const Fp& a)
{
    if (a.is_zero()) {
        return Fp::zero(a.params());
    }
    const Int& p = a.params().p;
    Fp s = fp_pow(a, (p + 1) / 4);
    if (s * s != a) {
        return std::nullopt;
    }
    return s;
}

Fp2::Fp2(Fp c0, Fp c1) : c0_(std::move(c0)), c1_(std::move(c1))
{
    assert(c0_.params().p == c1_.params().p);
}

Fp2 Fp2::zero(const CurveParams& cp)
{
    return Fp2(Fp::zero(cp), Fp::zero(cp));
}

Fp2 Fp2::one(const CurveParams& cp)
{
    return Fp2(Fp::one(cp), Fp::zero(cp));
}

Fp2 Fp2::from_int(const CurveParams& cp, unsigned v)
{
    return Fp2(Fp::from_int(cp, v), Fp::zero(cp));
}

Fp2 Fp2::operator-() const
{
    return Fp2(-c0_, -c1_);
}

Fp2 operator+(const Fp2& a, const Fp2& b)
{
    return Fp2(a.c0_ + b.c0_, a.c1_ + b.c1_);
}

Fp2 operator-(const Fp2& a, const Fp2& b)
{
    return Fp2(a.c0_ - b.c0_, a.c1_ - b.c1_);
}

Fp2 operator*(const Fp2& a, const Fp2& b)
{
    // (a0 + a1 i)(b0 + b1 i) = (a0 b0 - a1 b1) + (a0 b1 + a1 b0) i
    return Fp2(a.c0_ * b.c0_ - a.c1_ * b.c1_, a.c0_ * b.c1_ + a.c1_ * b.c0_);
}

Fp2 operator/(const Fp2& a, const Fp2& b)
{
    return a * fp2_inv(b);
}

Fp2 fp2_inv(const Fp2& a)
{
    if (a.is_zero()) {
        raise(Errc::division_by_zero, "inverse of zero in F_p^2");
    }
    // norm = c0^2 + c1^2 is nonzero: -1 has no square root in F_p.
    Fp norm = a.c0() * a.c0() + a.c1() * a.c1();
    Fp inv_norm = fp_inv(norm);
    return Fp2(a.c0() * inv_norm, (-a.c1()) * inv_norm);
}

Fp2 fp2_pow(const Fp2& a, const Int& e)
{
    const CurveParams& cp = a.params();
    Fp2 acc = Fp2::one(cp);
    if (e == 0) {
        return acc;
    }
    for (std::size_t i = bit_length(e); i-- > 0;) {
        acc = acc * acc;
        if (bit_test(e, i)) {
            acc = acc * a;
        }
    }
    return acc;
}

std::optional<Fp2> fp2_sqrt(const Fp2& a)
{
    const CurveParams& cp = a.params();
    if (a.is_zero()) {
        return Fp2::zero(cp);
    }
    if (a.c1().is_zero()) {
        // Purely real: either sqrt(c0) stays real or sqrt(-c0) exists and
        // the root is purely imaginary, since i^2 = -1.
        if (auto s = fp_sqrt(a.c0())) {
            return Fp2(*s, Fp::zero(cp));
        }
        if (auto s = fp_sqrt(-a.c0())) {
            return Fp2(Fp::zero(cp), *s);
        }
        return std::nullopt;
    }
    // Write the root as x0 + y0 i. Then x0^2 - y0^2 = c0 and 2 x0 y0 = c1,
    // so x0^2 is a root of t^2 - c0 t - c1^2/4 with discriminant the norm.
    Fp norm = a.c0() * a.c0() + a.c1() * a.c1();
    auto n = fp_sqrt(norm);
    if (!n) {
        return std::nullopt;
    }
    Fp half = fp_inv(Fp::from_int(cp, 2));
    for (const Fp& d : {(a.c0() + *n) * half, (a.c0() - *n) * half}) {
        auto x0 = fp_sqrt(d);
        if (!x0 || x0->is_zero()) {
            continue;
        }
        Fp y0 = a.c1() * half * fp_inv(*x0);
        Fp2 cand(*x0, y0);
        if (cand * cand == a) {
            return cand;
        }
    }
    return std::nullopt;
}

bool fp2_lex_gt(const Fp2& a, const Fp2& b)
{
    if (a.c1().value() != b.c1().value()) {
        return a.c1().value() > b.c1().value();
    }
    return a.c0().value() > b.c0().value();
}

}  // namespace toybls
