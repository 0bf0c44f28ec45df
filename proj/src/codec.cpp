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

#include "toybls/codec.hpp"

#include <algorithm>

#include "toybls/errors.hpp"

namespace toybls {

namespace {

constexpr uint8_t kFlagMask = kFlagCompressed | kFlagInfinity | kFlagSort;

bool payload_zero(const Bytes& in)
{
    if ((in[0] & ~kFlagMask) != 0) {
        return false;
    }
    return std::all_of(in.begin() + 1, in.end(), [](uint8_t b) { return b == 0; });
}

// Reads one fe_len-wide big-endian component; the caller has already
// cleared the flag bits of the first byte.
Int read_component(const Bytes& in, std::size_t index, const CurveParams& cp)
{
    return int_from_bytes_be(in.data() + index * cp.fe_len, cp.fe_len);
}

// Shared front half of both decoders: length check and the infinity
// forms. Returns true when the input decoded to infinity.
bool decode_infinity(const Bytes& in, std::size_t clen, std::size_t ulen,
                     bool strict)
{
    if (in.size() != clen && in.size() != ulen) {
        raise(Errc::bad_length, "unexpected encoding length");
    }
    if (!(in[0] & kFlagInfinity)) {
        return false;
    }
    if (!payload_zero(in)) {
        raise(Errc::non_canonical_infinity, "infinity flag with nonzero payload");
    }
    if (strict) {
        bool comp = in[0] & kFlagCompressed;
        if ((in[0] & kFlagSort) || comp != (in.size() == clen)) {
            raise(Errc::non_canonical_infinity, "infinity flags are not canonical");
        }
    }
    return true;
}

void check_finite_form(const Bytes& in, std::size_t clen)
{
    bool comp = in[0] & kFlagCompressed;
    if (comp != (in.size() == clen)) {
        raise(Errc::bad_length, "compression flag contradicts the length");
    }
}

Int checked_range(Int v, const CurveParams& cp)
{
    if (v >= cp.p) {
        raise(Errc::coordinate_out_of_range, "component not below p");
    }
    return v;
}

template <class F>
F pick_root(const F& s, bool sort_larger, bool (*gt)(const F&, const F&))
{
    F neg = -s;
    const F& hi = gt(s, neg) ? s : neg;
    const F& lo = gt(s, neg) ? neg : s;
    if (sort_larger) {
        if (hi == lo) {
            raise(Errc::bad_flags, "sort bit set but y = -y");
        }
        return hi;
    }
    return lo;
}

bool fp_gt(const Fp& a, const Fp& b)
{
    return a.value() > b.value();
}

G1Point decode_g1(const Bytes& in, const CurveParams& cp, bool strict)
{
    if (decode_infinity(in, cp.fe_len, 2 * cp.fe_len, strict)) {
        return G1Point::infinity(cp);
    }
    check_finite_form(in, cp.fe_len);
    bool sort = in[0] & kFlagSort;
    Bytes buf = in;
    buf[0] &= ~kFlagMask;
    G1Point pt = G1Point::infinity(cp);
    if (in.size() == cp.fe_len) {
        Fp x(cp, checked_range(read_component(buf, 0, cp), cp));
        auto s = fp_sqrt(x * x * x + x);
        if (!s) {
            raise(Errc::not_on_curve, "x^3 + x is not a square");
        }
        pt = G1Point::affine(x, pick_root(*s, sort, fp_gt));
    } else {
        if (sort) {
            raise(Errc::bad_flags, "sort bit on an uncompressed encoding");
        }
        Fp x(cp, checked_range(read_component(buf, 0, cp), cp));
        Fp y(cp, checked_range(read_component(buf, 1, cp), cp));
        pt = G1Point::affine(x, y);
    }
    if (strict && !is_in_subgroup(pt)) {
        raise(Errc::not_in_subgroup, "point is outside the order-r subgroup");
    }
    return pt;
}

G2Point decode_g2(const Bytes& in, const CurveParams& cp, bool strict)
{
    if (decode_infinity(in, 2 * cp.fe_len, 4 * cp.fe_len, strict)) {
        return G2Point::infinity(cp);
    }
    check_finite_form(in, 2 * cp.fe_len);
    bool sort = in[0] & kFlagSort;
    Bytes buf = in;
    buf[0] &= ~kFlagMask;
    auto component_pair = [&](std::size_t base) {
        Fp c1(cp, checked_range(read_component(buf, base, cp), cp));
        Fp c0(cp, checked_range(read_component(buf, base + 1, cp), cp));
        return Fp2(c0, c1);
    };
    G2Point pt = G2Point::infinity(cp);
    if (in.size() == 2 * cp.fe_len) {
        Fp2 x = component_pair(0);
        auto s = fp2_sqrt(x * x * x + x);
        if (!s) {
            raise(Errc::not_on_curve, "x^3 + x is not a square");
        }
        pt = G2Point::affine(x, pick_root(*s, sort, fp2_lex_gt));
    } else {
        if (sort) {
            raise(Errc::bad_flags, "sort bit on an uncompressed encoding");
        }
        pt = G2Point::affine(component_pair(0), component_pair(2));
    }
    if (strict && !is_in_subgroup(pt)) {
        raise(Errc::not_in_subgroup, "point is outside the order-r subgroup");
    }
    return pt;
}

}  // namespace

Bytes encode(const G1Point& p, bool compressed)
{
    const CurveParams& cp = p.params();
    if (p.is_infinity()) {
        Bytes out(compressed ? cp.fe_len : 2 * cp.fe_len, 0);
        out[0] = kFlagInfinity | (compressed ? kFlagCompressed : 0);
        return out;
    }
    if (compressed) {
        Bytes out = int_to_bytes_be(p.x().value(), cp.fe_len);
        out[0] |= kFlagCompressed;
        if (fp_gt(p.y(), -p.y())) {
            out[0] |= kFlagSort;
        }
        return out;
    }
    Bytes out = int_to_bytes_be(p.x().value(), cp.fe_len);
    append(out, int_to_bytes_be(p.y().value(), cp.fe_len));
    return out;
}

Bytes encode(const G2Point& p, bool compressed)
{
    const CurveParams& cp = p.params();
    if (p.is_infinity()) {
        Bytes out(compressed ? 2 * cp.fe_len : 4 * cp.fe_len, 0);
        out[0] = kFlagInfinity | (compressed ? kFlagCompressed : 0);
        return out;
    }
    Bytes out = int_to_bytes_be(p.x().c1().value(), cp.fe_len);
    append(out, int_to_bytes_be(p.x().c0().value(), cp.fe_len));
    if (compressed) {
        out[0] |= kFlagCompressed;
        if (fp2_lex_gt(p.y(), -p.y())) {
            out[0] |= kFlagSort;
        }
        return out;
    }
    append(out, int_to_bytes_be(p.y().c1().value(), cp.fe_len));
    append(out, int_to_bytes_be(p.y().c0().value(), cp.fe_len));
    return out;
}

G1Point decode_g1_strict(const Bytes& in, const CurveParams& cp)
{
    return decode_g1(in, cp, true);
}

G2Point decode_g2_strict(const Bytes& in, const CurveParams& cp)
{
    return decode_g2(in, cp, true);
}

G1Point decode_g1_lenient(const Bytes& in, const CurveParams& cp)
{
    return decode_g1(in, cp, false);
}

G2Point decode_g2_lenient(const Bytes& in, const CurveParams& cp)
{
    return decode_g2(in, cp, false);
}

bool is_infinity_bytes_naive(const Bytes& in)
{
    if (in.empty() || in[0] != (kFlagCompressed | kFlagInfinity)) {
        return false;
    }
    return std::all_of(in.begin() + 1, in.end(), [](uint8_t b) { return b == 0; });
}

}  // namespace toybls
