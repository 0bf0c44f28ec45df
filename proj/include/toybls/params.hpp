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

#include <cstdint>
#include <string>

#include "toybls/bigint.hpp"

namespace toybls {

/// Parameters of a small supersingular curve y^2 = x^3 + x over F_p with
/// p = 4r - 1, so p = 3 (mod 4), #E(F_p) = p + 1 = 4r and the embedding
/// degree is 2. The order-r subgroup generated by (gx, gy) is the signing
/// group; its image under the distortion map supplies the second pairing
/// argument.
///
/// Field, curve and pairing values keep a pointer back to the params they
/// were built from; the CurveParams object must outlive them. Instances
/// are immutable after construction and safe to share across threads.
struct CurveParams {
    Int p;             // base field prime
    Int r;             // prime subgroup order
    Int h;             // cofactor, h * r == p + 1
    Int gx, gy;        // generator of the order-r subgroup
    std::size_t fe_len = 0;   // serialized field element width in bytes
    std::string dst_sig;      // domain tag for message hashing
    std::string dst_pop;      // domain tag for proofs of possession
};

/// Serialized width that leaves the top three bits of the leading byte
/// free for encoding flags.
std::size_t fe_len_for(const Int& p);

/// Deterministic search for a curve with p of roughly target_bits bits.
/// Accepts 2 <= target_bits <= 256; throws search-exhausted otherwise or
/// when the scan window holds no suitable prime pair.
CurveParams generate_params(unsigned target_bits, uint64_t seed);

/// Checks every structural invariant and throws the first violation.
void validate_params(const CurveParams& cp);

/// p = 19, r = 5 fixture, small enough for exhaustive checks.
const CurveParams& tiny_params();

/// Pinned 60-bit fixture, the library default.
const CurveParams& default_params();

/// One-line key=value rendering, decimal integers.
std::string params_to_text(const CurveParams& cp);

/// Inverse of params_to_text; validates before returning.
CurveParams params_from_text(const std::string& text);

}  // namespace toybls
