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

#include "toybls/field.hpp"

namespace toybls {

/// Affine point on y^2 = x^3 + x over F_p, or the point at infinity.
/// Construction through affine() checks the curve equation, so every
/// finite G1Point lies on the curve.
class G1Point {
public:
    static G1Point infinity(const CurveParams& cp);

    /// Throws not-on-curve when the coordinates fail the equation.
    static G1Point affine(const Fp& x, const Fp& y);

    bool is_infinity() const { return inf_; }
    const Fp& x() const;
    const Fp& y() const;
    const CurveParams& params() const { return x_.params(); }

    G1Point operator-() const;
    friend G1Point operator+(const G1Point& a, const G1Point& b);
    friend bool operator==(const G1Point& a, const G1Point& b);
    friend bool operator!=(const G1Point& a, const G1Point& b) { return !(a == b); }

private:
    G1Point(Fp x, Fp y, bool inf) : x_(std::move(x)), y_(std::move(y)), inf_(inf) {}

    Fp x_, y_;
    bool inf_;
};

/// Same curve read over F_p^2. Supersingularity gives embedding degree 2,
/// so all the pairing values live here.
class G2Point {
public:
    static G2Point infinity(const CurveParams& cp);
    static G2Point affine(const Fp2& x, const Fp2& y);

    bool is_infinity() const { return inf_; }
    const Fp2& x() const;
    const Fp2& y() const;
    const CurveParams& params() const { return x_.params(); }

    G2Point operator-() const;
    friend G2Point operator+(const G2Point& a, const G2Point& b);
    friend bool operator==(const G2Point& a, const G2Point& b);
    friend bool operator!=(const G2Point& a, const G2Point& b) { return !(a == b); }

private:
    G2Point(Fp2 x, Fp2 y, bool inf)
        : x_(std::move(x)), y_(std::move(y)), inf_(inf)
    {
    }

    Fp2 x_, y_;
    bool inf_;
};

G1Point g1_generator(const CurveParams& cp);

G1Point mul(const Int& k, const G1Point& p);
G2Point mul(const Int& k, const G2Point& p);

/// Distortion map (x, y) -> (-x, i y). Carries the order-r subgroup of
/// E(F_p) onto an independent order-r subgroup of E(F_p^2), which makes
/// the pairing of a point with its own image non-degenerate.
G2Point distort(const G1Point& p);

/// True iff r * p is the identity.
bool is_in_subgroup(const G1Point& p);
bool is_in_subgroup(const G2Point& p);

/// Try-and-increment hash onto the distortion-image subgroup. For each
/// counter c the candidate abscissa is
/// SHA-256(dst || len(dst) as one byte || msg || c as 4-byte big-endian)
/// reduced mod p; the first candidate with a square x^3 + x yields a
/// curve point (taking the numerically smaller root), which is cleared
/// by the cofactor and distorted. Throws hash-failure after 512
/// counters, and empty-input when dst is empty.
G2Point hash_to_g2(const Bytes& msg, const Bytes& dst, const CurveParams& cp);

}  // namespace toybls
