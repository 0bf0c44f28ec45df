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

#include "toybls/curve.hpp"

#include "toybls/errors.hpp"

namespace toybls {

namespace {

template <class F>
bool on_curve(const F& x, const F& y)
{
    return y * y == x * x * x + x;
}

// Chord-and-tangent law, shared by both coordinate fields.
template <class Pt, class F>
Pt add_points(const Pt& a, const Pt& b)
{
    if (a.is_infinity()) {
        return b;
    }
    if (b.is_infinity()) {
        return a;
    }
    const CurveParams& cp = a.params();
    const F& x1 = a.x();
    const F& y1 = a.y();
    const F& x2 = b.x();
    const F& y2 = b.y();
    if (x1 == x2 && y1 == -y2) {
        // Vertical chord, including doubling a point with y = 0.
        return Pt::infinity(cp);
    }
    F lambda = (x1 == x2)
                   ? (F::from_int(cp, 3) * x1 * x1 + F::one(cp)) /
                         (F::from_int(cp, 2) * y1)
                   : (y2 - y1) / (x2 - x1);
    F x3 = lambda * lambda - x1 - x2;
    F y3 = lambda * (x1 - x3) - y1;
    return Pt::affine(x3, y3);
}

template <class Pt>
Pt mul_point(const Int& k, const Pt& p)
{
    const CurveParams& cp = p.params();
    if (k < 0) {
        return mul_point(Int(-k), -p);
    }
    Pt acc = Pt::infinity(cp);
    for (std::size_t i = bit_length(k); i-- > 0;) {
        acc = acc + acc;
        if (bit_test(k, i)) {
            acc = acc + p;
        }
    }
    return acc;
}

}  // namespace

G1Point G1Point::infinity(const CurveParams& cp)
{
    return G1Point(Fp::zero(cp), Fp::zero(cp), true);
}

G1Point G1Point::affine(const Fp& x, const Fp& y)
{
    if (!on_curve(x, y)) {
        raise(Errc::not_on_curve, "G1 coordinates fail the curve equation");
    }
    return G1Point(x, y, false);
}

const Fp& G1Point::x() const
{
    if (inf_) {
        throw std::logic_error("coordinate access on the point at infinity");
    }
    return x_;
}

const Fp& G1Point::y() const
{
    if (inf_) {
        throw std::logic_error("coordinate access on the point at infinity");
    }
    return y_;
}

G1Point G1Point::operator-() const
{
    if (inf_) {
        return *this;
    }
    return G1Point(x_, -y_, false);
}

G1Point operator+(const G1Point& a, const G1Point& b)
{
    return add_points<G1Point, Fp>(a, b);
}

bool operator==(const G1Point& a, const G1Point& b)
{
    if (a.inf_ || b.inf_) {
        return a.inf_ == b.inf_;
    }
    return a.x_ == b.x_ && a.y_ == b.y_;
}

G2Point G2Point::infinity(const CurveParams& cp)
{
    return G2Point(Fp2::zero(cp), Fp2::zero(cp), true);
}

G2Point G2Point::affine(const Fp2& x, const Fp2& y)
{
    if (!on_curve(x, y)) {
        raise(Errc::not_on_curve, "G2 coordinates fail the curve equation");
    }
    return G2Point(x, y, false);
}

const Fp2& G2Point::x() const
{
    if (inf_) {
        throw std::logic_error("coordinate access on the point at infinity");
    }
    return x_;
}

const Fp2& G2Point::y() const
{
    if (inf_) {
        throw std::logic_error("coordinate access on the point at infinity");
    }
    return y_;
}

G2Point G2Point::operator-() const
{
    if (inf_) {
        return *this;
    }
    return G2Point(x_, -y_, false);
}

G2Point operator+(const G2Point& a, const G2Point& b)
{
    return add_points<G2Point, Fp2>(a, b);
}

bool operator==(const G2Point& a, const G2Point& b)
{
    if (a.inf_ || b.inf_) {
        return a.inf_ == b.inf_;
    }
    return a.x_ == b.x_ && a.y_ == b.y_;
}

G1Point g1_generator(const CurveParams& cp)
{
    return G1Point::affine(Fp(cp, cp.gx), Fp(cp, cp.gy));
}

G1Point mul(const Int& k, const G1Point& p)
{
    return mul_point(k, p);
}

G2Point mul(const Int& k, const G2Point& p)
{
    return mul_point(k, p);
}

G2Point distort(const G1Point& p)
{
    const CurveParams& cp = p.params();
    if (p.is_infinity()) {
        return G2Point::infinity(cp);
    }
    // (i y)^2 = -y^2 = -(x^3 + x) = (-x)^3 + (-x), so the image stays on
    // the curve.
    return G2Point::affine(Fp2(-p.x(), Fp::zero(cp)), Fp2(Fp::zero(cp), p.y()));
}

bool is_in_subgroup(const G1Point& p)
{
    return mul(p.params().r, p).is_infinity();
}

bool is_in_subgroup(const G2Point& p)
{
    return mul(p.params().r, p).is_infinity();
}

G2Point hash_to_g2(const Bytes& msg, const Bytes& dst, const CurveParams& cp)
{
    if (dst.empty() || dst.size() > 255) {
        raise(Errc::empty_input, "domain separation tag must be 1..255 bytes");
    }
    Bytes prefix = dst;
    prefix.push_back(static_cast<uint8_t>(dst.size()));
    append(prefix, msg);
    for (uint32_t counter = 0; counter < 512; ++counter) {
        Bytes buf = prefix;
        append_u32_be(buf, counter);
        Fp x(cp, int_from_bytes_be(sha256(buf)));
        Fp t = x * x * x + x;
        auto s = fp_sqrt(t);
        if (!s) {
            continue;
        }
        Fp y = (s->value() <= (-*s).value()) ? *s : -*s;
        G1Point q = mul(cp.h, G1Point::affine(x, y));
        if (q.is_infinity()) {
            continue;
        }
        return distort(q);
    }
    raise(Errc::hash_failure, "no curve point found in 512 attempts");
}

}  // namespace toybls
