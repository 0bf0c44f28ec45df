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

#include "toybls/pairing.hpp"

#include "toybls/errors.hpp"

namespace toybls {

namespace {

Fp2 lift(const Fp& a)
{
    return Fp2(a, Fp::zero(a.params()));
}

struct Step {
    Fp2 line;   // line through the step operands, evaluated at Q
    Fp2 vert;   // vertical through the step result, evaluated at Q
    G1Point next;
};

// Tangent at T. A two-torsion T (y = 0) turns the tangent vertical and
// sends the step to infinity.
Step double_step(const G1Point& t, const Fp2& qx, const Fp2& qy)
{
    const CurveParams& cp = t.params();
    Fp2 one = Fp2::one(cp);
    if (t.is_infinity()) {
        return {one, one, t};
    }
    if (t.y().is_zero()) {
        return {qx - lift(t.x()), one, G1Point::infinity(cp)};
    }
    Fp lambda = (Fp::from_int(cp, 3) * t.x() * t.x() + Fp::one(cp)) /
                (Fp::from_int(cp, 2) * t.y());
    Fp2 line = (qy - lift(t.y())) - lift(lambda) * (qx - lift(t.x()));
    G1Point next = t + t;
    Fp2 vert = next.is_infinity() ? one : qx - lift(next.x());
    return {line, vert, next};
}

// Chord through T and P.
Step add_step(const G1Point& t, const G1Point& p, const Fp2& qx, const Fp2& qy)
{
    const CurveParams& cp = p.params();
    Fp2 one = Fp2::one(cp);
    if (t.is_infinity()) {
        return {one, one, p};
    }
    if (t.x() == p.x()) {
        if (t.y() == -p.y()) {
            // T + P = infinity; the chord is the vertical at T.
            return {qx - lift(t.x()), one, G1Point::infinity(cp)};
        }
        return double_step(t, qx, qy);
    }
    Fp lambda = (p.y() - t.y()) / (p.x() - t.x());
    Fp2 line = (qy - lift(t.y())) - lift(lambda) * (qx - lift(t.x()));
    G1Point next = t + p;
    Fp2 vert = qx - lift(next.x());
    return {line, vert, next};
}

}  // namespace

GtElement gt_pow(const GtElement& a, const Int& e)
{
    if (e < 0) {
        return GtElement(fp2_pow(fp2_inv(a.value()), -e));
    }
    return GtElement(fp2_pow(a.value(), e));
}

Fp2 miller_loop(const G1Point& p, const G2Point& q)
{
    const CurveParams& cp = p.params();
    Fp2 one = Fp2::one(cp);
    if (p.is_infinity() || q.is_infinity()) {
        return one;
    }
    const Fp2& qx = q.x();
    const Fp2& qy = q.y();
    G1Point t = p;
    Fp2 num = one, den = one;
    const Int& r = cp.r;
    for (std::size_t i = bit_length(r) - 1; i-- > 0;) {
        num = num * num;
        den = den * den;
        Step d = double_step(t, qx, qy);
        num = num * d.line;
        den = den * d.vert;
        t = d.next;
        if (bit_test(r, i)) {
            Step a = add_step(t, p, qx, qy);
            num = num * a.line;
            den = den * a.vert;
            t = a.next;
        }
    }
    if (num.is_zero() || den.is_zero()) {
        raise(Errc::degenerate_pairing, "line function vanished at the evaluation point");
    }
    return num / den;
}

GtElement final_exponentiation(const Fp2& f, const CurveParams& cp)
{
    if (f.is_zero()) {
        raise(Errc::degenerate_pairing, "zero is outside the multiplicative group");
    }
    Int e = (cp.p * cp.p - 1) / cp.r;
    return GtElement(fp2_pow(f, e));
}

GtElement pairing(const G1Point& p, const G2Point& q)
{
    return final_exponentiation(miller_loop(p, q), p.params());
}

}  // namespace toybls
