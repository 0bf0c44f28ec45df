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

#include <functional>

#include "toybls/errors.hpp"
#include "toybls/params.hpp"

using namespace toybls;

static Errc code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::io_error;
}

TEST_CASE("three-bit search lands on p = 19")
{
    CurveParams cp = generate_params(3, 0);
    CHECK(cp.p == 19);
    CHECK(cp.r == 5);
    CHECK(cp.h == 4);
    CHECK(cp.fe_len == 1);
    validate_params(cp);

    // The window only holds one prime pair, so every seed agrees.
    CurveParams other = generate_params(3, 12345);
    CHECK(other.p == 19);
    CHECK(other.r == 5);
}

TEST_CASE("two-bit search lands on p = 11")
{
    CurveParams cp = generate_params(2, 0);
    CHECK(cp.p == 11);
    CHECK(cp.r == 3);
    validate_params(cp);
}

TEST_CASE("search is deterministic and seed-sensitive")
{
    CurveParams a = generate_params(40, 9);
    CurveParams b = generate_params(40, 9);
    CHECK(a.p == b.p);
    CHECK(a.r == b.r);
    CHECK(a.gx == b.gx);
    CHECK(a.gy == b.gy);
    CHECK(bit_length(a.r) == 40);
    validate_params(a);

    CurveParams c = generate_params(40, 10);
    validate_params(c);
    CHECK((c.p != a.p || c.gx != a.gx));
}

TEST_CASE("out-of-range sizes are refused")
{
    CHECK(code_of([] { generate_params(1, 0); }) == Errc::search_exhausted);
    CHECK(code_of([] { generate_params(0, 0); }) == Errc::search_exhausted);
    CHECK(code_of([] { generate_params(257, 0); }) == Errc::search_exhausted);
}

TEST_CASE("fixtures validate")
{
    const CurveParams& tiny = tiny_params();
    CHECK(tiny.p == 19);
    CHECK(tiny.gx == 5);
    CHECK(tiny.gy == 4);
    validate_params(tiny);

    const CurveParams& dflt = default_params();
    validate_params(dflt);
    CHECK(bit_length(dflt.r) == 60);
    CHECK(dflt.h == 4);
    CHECK(dflt.p == 4 * dflt.r - 1);
    CHECK(dflt.fe_len == 9);
    CHECK(dflt.dst_sig != dflt.dst_pop);

    // The fixture is the pinned output of the deterministic search.
    CurveParams regenerated = generate_params(60, 1);
    CHECK(regenerated.p == dflt.p);
    CHECK(regenerated.r == dflt.r);
    CHECK(regenerated.gx == dflt.gx);
    CHECK(regenerated.gy == dflt.gy);
}

TEST_CASE("validation pinpoints each broken invariant")
{
    const CurveParams good = tiny_params();

    CurveParams bad = good;
    bad.p = 21;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::p_not_prime);

    bad = good;
    bad.p = 17;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::p_not_3_mod_4);

    bad = good;
    bad.r = 4;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::r_not_prime);

    bad = good;
    bad.r = 19;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::r_equals_p);

    bad = good;
    bad.h = 5;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::cofactor_mismatch);

    bad = good;
    bad.r = 2;
    bad.h = 10;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::r_divides_h);

    bad = good;
    bad.fe_len = 2;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::fe_len_mismatch);

    bad = good;
    bad.dst_pop = bad.dst_sig;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::dst_not_distinct);

    bad = good;
    bad.dst_sig = "";
    CHECK(code_of([&] { validate_params(bad); }) == Errc::dst_not_distinct);

    bad = good;
    bad.gy = 5;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::generator_not_on_curve);

    bad = good;
    bad.gx = 25;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::coordinate_out_of_range);

    // (3, 7) sits on the curve but generates the whole group, not the
    // order-r subgroup.
    bad = good;
    bad.gx = 3;
    bad.gy = 7;
    CHECK(code_of([&] { validate_params(bad); }) == Errc::generator_wrong_order);
}

TEST_CASE("text rendering round trips")
{
    const CurveParams& cp = tiny_params();
    std::string text = params_to_text(cp);
    CHECK(text ==
          "p=19 r=5 h=4 gx=5 gy=4 dst_sig=BLS_SIG_TOYCURVE_NUL_ "
          "dst_pop=BLS_POP_TOYCURVE_NUL_\n");
    CurveParams back = params_from_text(text);
    CHECK(back.p == cp.p);
    CHECK(back.r == cp.r);
    CHECK(back.h == cp.h);
    CHECK(back.gx == cp.gx);
    CHECK(back.gy == cp.gy);
    CHECK(back.fe_len == cp.fe_len);
    CHECK(back.dst_sig == cp.dst_sig);
    CHECK(back.dst_pop == cp.dst_pop);

    std::string dflt_text = params_to_text(default_params());
    CHECK(params_from_text(dflt_text).p == default_params().p);
}

TEST_CASE("malformed parameter text is rejected")
{
    CHECK(code_of([] { params_from_text("p=19 r=5"); }) == Errc::parse_error);
    CHECK(code_of([] { params_from_text("nonsense"); }) == Errc::parse_error);
    CHECK(code_of([] {
              params_from_text("p=x r=5 h=4 gx=5 gy=4 dst_sig=a dst_pop=b");
          }) == Errc::parse_error);
    // Parsable but invalid: validation applies on load.
    CHECK(code_of([] {
              params_from_text("p=19 r=5 h=5 gx=5 gy=4 dst_sig=a dst_pop=b");
          }) == Errc::cofactor_mismatch);
}
