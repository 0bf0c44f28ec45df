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

#pragma once

#include "toybls/curve.hpp"

namespace toybls {

/// Element of the order-r subgroup of F_p^2*, produced by the final
/// exponentiation. Supports exactly what signature verification needs:
/// products, powers and comparison against one.
class GtElement {
public:
    explicit GtElement(Fp2 v) : v_(std::move(v)) {}

    static GtElement one(const CurveParams& cp) { return GtElement(Fp2::one(cp)); }

    const Fp2& value() const { return v_; }
    bool is_one() const { return v_ == Fp2::one(v_.params()); }

    friend GtElement operator*(const GtElement& a, const GtElement& b)
    {
        return GtElement(a.v_ * b.v_);
    }
    friend bool operator==(const GtElement& a, const GtElement& b)
    {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const GtElement& a, const GtElement& b)
    {
        return !(a == b);
    }

private:
    Fp2 v_;
};

GtElement gt_pow(const GtElement& a, const Int& e);

/// Miller loop over the bits of r with explicit line and vertical
/// evaluations; numerator and denominator accumulate separately and are
/// divided once at the end. Infinity inputs short-circuit to 1 before
/// the loop runs. Throws degenerate-pairing if either accumulator ends
/// at zero, which cannot happen for subgroup x distortion-image inputs.
Fp2 miller_loop(const G1Point& p, const G2Point& q);

/// f^((p^2 - 1) / r) by square-and-multiply.
GtElement final_exponentiation(const Fp2& f, const CurveParams& cp);

/// Reduced Tate pairing e(p, q) = final_exponentiation(miller_loop(p, q)).
/// Bilinear, and non-degenerate on generator x distorted-generator.
GtElement pairing(const G1Point& p, const G2Point& q);

}  // namespace toybls
