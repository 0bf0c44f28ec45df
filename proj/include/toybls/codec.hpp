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

/// Flag bits carried in the top three bits of the first byte.
/// Compressed points hold x only; the sort bit selects the
/// lexicographically larger of {y, -y}.
inline constexpr uint8_t kFlagCompressed = 0x80;
inline constexpr uint8_t kFlagInfinity = 0x40;
inline constexpr uint8_t kFlagSort = 0x20;

/// G1: fe_len bytes compressed, 2*fe_len uncompressed (x || y).
/// G2: components in (c1, c0) order, twice those widths.
/// Infinity is all-zero payload with the infinity bit set and the
/// compression bit matching the chosen length.
Bytes encode(const G1Point& p, bool compressed);
Bytes encode(const G2Point& p, bool compressed);

/// Full validation: canonical flags and lengths, coordinates below p,
/// curve membership, subgroup membership. Throws bad-length,
/// non-canonical-infinity, bad-flags, coordinate-out-of-range,
/// not-on-curve or not-in-subgroup.
G1Point decode_g1_strict(const Bytes& in, const CurveParams& cp);
G2Point decode_g2_strict(const Bytes& in, const CurveParams& cp);

/// Bug-compatible decoder: any first byte with the infinity bit set and
/// an otherwise all-zero payload decodes to infinity, whatever the
/// remaining flag bits say, and the subgroup check is skipped. Length,
/// range and curve membership are still enforced.
G1Point decode_g1_lenient(const Bytes& in, const CurveParams& cp);
G2Point decode_g2_lenient(const Bytes& in, const CurveParams& cp);

/// Byte comparison against the single canonical compressed infinity
/// pattern, the shortcut real verifiers used in place of a decode. Its
/// blind spots are the point of several demos.
bool is_infinity_bytes_naive(const Bytes& in);

}  // namespace toybls
