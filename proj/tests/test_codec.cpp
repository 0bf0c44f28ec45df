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

#include <doctest.h>

#include <random>

#include "toybls/codec.hpp"
#include "toybls/curve.hpp"
#include "toybls/errors.hpp"

using namespace toybls;

namespace {

Errc g1_strict_code(const Bytes& in, const CurveParams& cp)
{
    try {
        decode_g1_strict(in, cp);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected decode to throw");
    return Errc::io_error;
}

Errc g2_strict_code(const Bytes& in, const CurveParams& cp)
{
    try {
        decode_g2_strict(in, cp);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected decode to throw");
    return Errc::io_error;
}

} // namespace

TEST_CASE("tiny-curve generator encodings are pinned")
{
    const CurveParams& cp = tiny_params();
    G1Point g = g1_generator(cp);

    CHECK(encode(g, true) == Bytes{0x85});
    CHECK(encode(-g, true) == Bytes{0xa5});
    CHECK(encode(g, false) == Bytes{0x05, 0x04});
    CHECK(encode(-g, false) == Bytes{0x05, 0x0f});

    G2Point h = distort(g);
    CHECK(encode(h, true) == Bytes{0x80, 0x0e});
    CHECK(encode(h, false) == Bytes{0x00, 0x0e, 0x04, 0x00});

    // Order-4 point outside the prime subgroup and the 2-torsion point.
    CHECK(encode(G1Point::affine(Fp::from_int(cp, 18), Fp::from_int(cp, 6)), true)
          == Bytes{0x92});
    CHECK(encode(G1Point::affine(Fp::zero(cp), Fp::zero(cp)), true) == Bytes{0x80});
}

TEST_CASE("tiny-curve infinity encodings are pinned")
{
    const CurveParams& cp = tiny_params();
    CHECK(encode(G1Point::infinity(cp), true) == Bytes{0xc0});
    CHECK(encode(G1Point::infinity(cp), false) == Bytes{0x40, 0x00});
    CHECK(encode(G2Point::infinity(cp), true) == Bytes{0xc0, 0x00});
    CHECK(encode(G2Point::infinity(cp), false) == Bytes{0x40, 0x00, 0x00, 0x00});
}

TEST_CASE("strict decode round-trips every tiny encoding")
{
    const CurveParams& cp = tiny_params();
    G1Point g = g1_generator(cp);
    CHECK(decode_g1_strict(Bytes{0x85}, cp) == g);
    CHECK(decode_g1_strict(Bytes{0xa5}, cp) == -g);
    CHECK(decode_g1_strict(Bytes{0x05, 0x04}, cp) == g);
    CHECK(decode_g1_strict(Bytes{0xc0}, cp) == G1Point::infinity(cp));
    CHECK(decode_g1_strict(Bytes{0x40, 0x00}, cp) == G1Point::infinity(cp));

    G2Point h = distort(g);
    CHECK(decode_g2_strict(Bytes{0x80, 0x0e}, cp) == h);
    CHECK(decode_g2_strict(Bytes{0x00, 0x0e, 0x04, 0x00}, cp) == h);
    CHECK(decode_g2_strict(Bytes{0xc0, 0x00}, cp) == G2Point::infinity(cp));
}

TEST_CASE("strict decode error codes are pinned per defect")
{
    const CurveParams& cp = tiny_params();

    SUBCASE("wrong length")
    {
        CHECK(g1_strict_code(Bytes{}, cp) == Errc::bad_length);
        CHECK(g1_strict_code(Bytes{0x85, 0x00, 0x00}, cp) == Errc::bad_length);
        CHECK(g2_strict_code(Bytes{0x80, 0x0e, 0x00}, cp) == Errc::bad_length);
        // Compressed flag with uncompressed length and vice versa.
        CHECK(g1_strict_code(Bytes{0x85, 0x00}, cp) == Errc::bad_length);
        CHECK(g1_strict_code(Bytes{0x05}, cp) == Errc::bad_length);
    }

    SUBCASE("malformed infinity")
    {
        CHECK(g1_strict_code(Bytes{0xc1}, cp) == Errc::non_canonical_infinity);
        CHECK(g1_strict_code(Bytes{0x40}, cp) == Errc::non_canonical_infinity);
        CHECK(g1_strict_code(Bytes{0x60, 0x00}, cp) == Errc::non_canonical_infinity);
        CHECK(g1_strict_code(Bytes{0xe0}, cp) == Errc::non_canonical_infinity);
        CHECK(g1_strict_code(Bytes{0xc0, 0x00}, cp) == Errc::non_canonical_infinity);
        CHECK(g2_strict_code(Bytes{0xc0, 0x01}, cp) == Errc::non_canonical_infinity);
    }

    SUBCASE("stray sort bit")
    {
        CHECK(g1_strict_code(Bytes{0x25, 0x04}, cp) == Errc::bad_flags);
        // Sort bit set while y == -y.
        CHECK(g1_strict_code(Bytes{0xa0}, cp) == Errc::bad_flags);
    }

    SUBCASE("coordinate out of range")
    {
        CHECK(g1_strict_code(Bytes{0x93}, cp) == Errc::coordinate_out_of_range);
        CHECK(g1_strict_code(Bytes{0x13, 0x04}, cp) == Errc::coordinate_out_of_range);
        CHECK(g1_strict_code(Bytes{0x05, 0x13}, cp) == Errc::coordinate_out_of_range);
    }

    SUBCASE("not on curve")
    {
        CHECK(g1_strict_code(Bytes{0x82}, cp) == Errc::not_on_curve);
        CHECK(g1_strict_code(Bytes{0x01, 0x01}, cp) == Errc::not_on_curve);
    }

    SUBCASE("outside the prime-order subgroup")
    {
        CHECK(g1_strict_code(Bytes{0x92}, cp) == Errc::not_in_subgroup);
        CHECK(g1_strict_code(Bytes{0x80}, cp) == Errc::not_in_subgroup);
        // G2 2-torsion point (i, 0) lies on the curve but not in the subgroup.
        CHECK(g2_strict_code(Bytes{0x01, 0x00, 0x00, 0x00}, cp) == Errc::not_in_subgroup);
    }
}

TEST_CASE("each flag mutation of the compressed generator lands where pinned")
{
    const CurveParams& cp = tiny_params();
    G1Point g = g1_generator(cp);
    for (int flags = 0; flags < 8; ++flags) {
        uint8_t b0 = static_cast<uint8_t>((flags << 5) | 0x05);
        Bytes in{b0};
        INFO("first byte ", int(b0));
        switch (b0 & 0xe0) {
        case 0x80:
            CHECK(decode_g1_strict(in, cp) == g);
            break;
        case 0xa0:
            CHECK(decode_g1_strict(in, cp) == -g);
            break;
        case 0x00:
        case 0x20:
            CHECK(g1_strict_code(in, cp) == Errc::bad_length);
            break;
        default:
            CHECK(g1_strict_code(in, cp) == Errc::non_canonical_infinity);
            break;
        }
    }
}

TEST_CASE("lenient decode accepts the infinity aliases strict rejects")
{
    const CurveParams& cp = tiny_params();
    for (uint8_t b0 : {0x40, 0x60, 0xc0, 0xe0}) {
        CHECK(decode_g1_lenient(Bytes{b0}, cp) == G1Point::infinity(cp));
        CHECK(decode_g1_lenient(Bytes{b0, 0x00}, cp) == G1Point::infinity(cp));
        CHECK(decode_g2_lenient(Bytes{b0, 0x00}, cp) == G2Point::infinity(cp));
        CHECK(decode_g2_lenient(Bytes{b0, 0x00, 0x00, 0x00}, cp)
              == G2Point::infinity(cp));
    }
    // Infinity bit plus payload still fails even leniently.
    CHECK_THROWS_AS(decode_g1_lenient(Bytes{0x40, 0x01}, cp), Error);
}

TEST_CASE("lenient decode skips the subgroup check but not the curve check")
{
    const CurveParams& cp = tiny_params();
    G1Point q = decode_g1_lenient(Bytes{0x92}, cp);
    CHECK(q == G1Point::affine(Fp::from_int(cp, 18), Fp::from_int(cp, 6)));
    CHECK_FALSE(is_in_subgroup(q));
    // All-zero bytes without the infinity bit decode as the 2-torsion
    // point (0, 0), not as infinity.
    CHECK(decode_g1_lenient(Bytes{0x80}, cp)
          == G1Point::affine(Fp::zero(cp), Fp::zero(cp)));
    CHECK_THROWS_AS(decode_g1_lenient(Bytes{0x82}, cp), Error);
}

TEST_CASE("naive infinity probe matches first-byte-0xc0 and nothing else")
{
    CHECK(is_infinity_bytes_naive(Bytes{0xc0}));
    CHECK(is_infinity_bytes_naive(Bytes{0xc0, 0x00, 0x00}));
    CHECK_FALSE(is_infinity_bytes_naive(Bytes{0x40, 0x00}));
    CHECK_FALSE(is_infinity_bytes_naive(Bytes{0xc0, 0x01}));
    CHECK_FALSE(is_infinity_bytes_naive(Bytes{}));
    for (int b0 = 0; b0 < 256; ++b0) {
        Bytes in{static_cast<uint8_t>(b0), 0x00};
        CHECK(is_infinity_bytes_naive(in) == (b0 == 0xc0));
    }
}

TEST_CASE("default-curve encodings round-trip through the strict decoder")
{
    const CurveParams& cp = default_params();
    G1Point g = g1_generator(cp);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        Int k = Int(rng()) % cp.r;
        G1Point p1 = mul(k, g);
        CHECK(decode_g1_strict(encode(p1, true), cp) == p1);
        CHECK(decode_g1_strict(encode(p1, false), cp) == p1);
        CHECK(encode(p1, true).size() == cp.fe_len);
        CHECK(encode(p1, false).size() == 2 * cp.fe_len);

        G2Point p2 = distort(p1);
        CHECK(decode_g2_strict(encode(p2, true), cp) == p2);
        CHECK(decode_g2_strict(encode(p2, false), cp) == p2);
        CHECK(encode(p2, true).size() == 2 * cp.fe_len);
        CHECK(encode(p2, false).size() == 4 * cp.fe_len);
    }
}
