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

#include "toybls/errors.hpp"
#include "toybls/pairing.hpp"

using namespace toybls;

TEST_CASE("tiny-curve pairing is non-degenerate of order r")
{
    const CurveParams& cp = tiny_params();
    G1Point g = g1_generator(cp);
    GtElement e = pairing(g, distort(g));
    CHECK_FALSE(e.is_one());
    CHECK(gt_pow(e, cp.r).is_one());
    CHECK((cp.p * cp.p - 1) / cp.r == 72);
}

TEST_CASE("tiny-curve bilinearity, exhaustively over the subgroup")
{
    const CurveParams& cp = tiny_params();
    G1Point g = g1_generator(cp);
    GtElement base = pairing(g, distort(g));
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            GtElement lhs = pairing(mul(a, g), distort(mul(b, g)));
            CHECK(lhs == gt_pow(base, Int(a) * b % cp.r));
        }
    }
}

TEST_CASE("infinity inputs short-circuit to one")
{
    const CurveParams& cp = tiny_params();
    G1Point g = g1_generator(cp);
    CHECK(pairing(G1Point::infinity(cp), distort(g)).is_one());
    CHECK(pairing(g, G2Point::infinity(cp)).is_one());
    CHECK(pairing(G1Point::infinity(cp), G2Point::infinity(cp)).is_one());
    CHECK(miller_loop(G1Point::infinity(cp), distort(g)) == Fp2::one(cp));
}

TEST_CASE("pairing both arguments from the same rational subgroup degenerates")
{
    // Without denominator elimination the vertical through the loop's
    // final step vanishes at a rational evaluation point.
    const CurveParams& cp = tiny_params();
    G1Point g = g1_generator(cp);
    G2Point lifted = G2Point::affine(Fp2(g.x(), Fp::zero(cp)),
                                     Fp2(g.y(), Fp::zero(cp)));
    CHECK_THROWS_AS(pairing(g, lifted), Error);
    try {
        pairing(g, lifted);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degenerate_pairing);
    }
}

TEST_CASE("gt products and powers compose")
{
    const CurveParams& cp = tiny_params();
    G1Point g = g1_generator(cp);
    GtElement e = pairing(g, distort(g));
    CHECK(gt_pow(e, 2) * gt_pow(e, 3) == gt_pow(e, 5));
    CHECK(gt_pow(e, 0).is_one());
    CHECK((gt_pow(e, 2) * gt_pow(e, -2)).is_one());
    CHECK(GtElement::one(cp).is_one());
}

TEST_CASE("default-curve bilinearity on random scalars")
{
    const CurveParams& cp = default_params();
    G1Point g = g1_generator(cp);
    GtElement base = pairing(g, distort(g));
    CHECK_FALSE(base.is_one());
    CHECK(gt_pow(base, cp.r).is_one());

    std::mt19937_64 rng(23);
    auto rand_scalar = [&] {
        Int v = (Int(rng()) << 64) + rng();
        return v % cp.r;
    };
    for (int i = 0; i < 20; ++i) {
        Int a = rand_scalar(), b = rand_scalar();
        GtElement lhs = pairing(mul(a, g), distort(mul(b, g)));
        CHECK(lhs == gt_pow(base, a * b % cp.r));
        // Moving a scalar across the arguments changes nothing.
        CHECK(pairing(mul(a, g), distort(g)) == pairing(g, distort(mul(a, g))));
    }
}

TEST_CASE("pairing against hashed points matches scalar arithmetic")
{
    const CurveParams& cp = default_params();
    G1Point g = g1_generator(cp);
    G2Point h = hash_to_g2(to_bytes("pairing probe"), to_bytes(cp.dst_sig), cp);
    Int k = 123456789;
    CHECK(pairing(mul(k, g), h) == gt_pow(pairing(g, h), k));
    CHECK(pairing(g, mul(k, h)) == gt_pow(pairing(g, h), k));
}
