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

#include <optional>

#include "toybls/params.hpp"

namespace toybls {

/// Element of F_p. Values are kept reduced to [0, p). Arithmetic is
/// variable-time throughout; this library is a study bench, not
/// production cryptography.
class Fp {
public:
    Fp(const CurveParams& cp, Int v);

    static Fp zero(const CurveParams& cp) { return Fp(cp, 0); }
    static Fp one(const CurveParams& cp) { return Fp(cp, 1); }
    static Fp from_int(const CurveParams& cp, unsigned v) { return Fp(cp, Int(v)); }

    const Int& value() const { return v_; }
    const CurveParams& params() const { return *cp_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const;
    friend Fp operator+(const Fp& a, const Fp& b);
    friend Fp operator-(const Fp& a, const Fp& b);
    friend Fp operator*(const Fp& a, const Fp& b);
    friend Fp operator/(const Fp& a, const Fp& b);
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

private:
    const CurveParams* cp_;
    Int v_;
};

/// Throws division-by-zero on zero input.
Fp fp_inv(const Fp& a);

/// a^e mod p for e >= 0.
Fp fp_pow(const Fp& a, const Int& e);

/// One square root when a is a quadratic residue, nullopt otherwise.
/// Uses the p = 3 (mod 4) shortcut a^((p+1)/4) and returns that value
/// uncanonicalized; callers pick between s and p - s themselves.
std::optional<Fp> fp_sqrt(const Fp& a);

/// Element of F_p^2 = F_p[i] / (i^2 + 1), written c0 + c1*i. The
/// polynomial is irreducible because p = 3 (mod 4) makes -1 a
/// non-residue.
class Fp2 {
public:
    Fp2(Fp c0, Fp c1);

    static Fp2 zero(const CurveParams& cp);
    static Fp2 one(const CurveParams& cp);
    static Fp2 from_int(const CurveParams& cp, unsigned v);

    const Fp& c0() const { return c0_; }
    const Fp& c1() const { return c1_; }
    const CurveParams& params() const { return c0_.params(); }
    bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

    Fp2 operator-() const;
    friend Fp2 operator+(const Fp2& a, const Fp2& b);
    friend Fp2 operator-(const Fp2& a, const Fp2& b);
    friend Fp2 operator*(const Fp2& a, const Fp2& b);
    friend Fp2 operator/(const Fp2& a, const Fp2& b);
    friend bool operator==(const Fp2& a, const Fp2& b)
    {
        return a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }
    friend bool operator!=(const Fp2& a, const Fp2& b) { return !(a == b); }

private:
    Fp c0_, c1_;
};

/// Throws division-by-zero on zero input.
Fp2 fp2_inv(const Fp2& a);

Fp2 fp2_pow(const Fp2& a, const Int& e);

/// Square root in F_p^2 when one exists.
std::optional<Fp2> fp2_sqrt(const Fp2& a);

/// Lexicographic order on (c1, c0), matching the serialized component
/// order. Used to pick the sign bit in compressed encodings.
bool fp2_lex_gt(const Fp2& a, const Fp2& b);

}  // namespace toybls
