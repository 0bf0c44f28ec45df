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

#include "toybls/params.hpp"

#include <map>
#include <sstream>

#include "toybls/curve.hpp"
#include "toybls/errors.hpp"
#include "toybls/field.hpp"

namespace toybls {

static const char* kDefaultDstSig = "BLS_SIG_TOYCURVE_NUL_";
static const char* kDefaultDstPop = "BLS_POP_TOYCURVE_NUL_";

std::size_t fe_len_for(const Int& p)
{
    return (bit_length(p) + 3 + 7) / 8;
}

static Bytes seed_tag(const char* tag, uint64_t seed)
{
    Bytes buf = to_bytes(tag);
    for (int i = 7; i >= 0; --i) {
        buf.push_back(static_cast<uint8_t>(seed >> (8 * i)));
    }
    return buf;
}

CurveParams generate_params(unsigned target_bits, uint64_t seed)
{
    if (target_bits < 2 || target_bits > 256) {
        raise(Errc::search_exhausted, "target_bits outside 2..256");
    }
    // r ranges over primes of exactly target_bits bits; p = 4r - 1 makes
    // the curve order 4r and keeps p = 3 (mod 4) automatic.
    Int lo = Int(1) << (target_bits - 1);
    Int span = lo;
    Int offset = int_from_bytes_be(sha256(seed_tag("toybls/params/r", seed))) % span;
    Int first = lo + offset;
    if (first % 2 == 0) {
        first += 1;
        if (first >= lo + span) {
            first -= span;
        }
    }
    Int r = 0, p = 0;
    bool found = false;
    Int steps = span / 2 + 1;
    Int cursor = first - lo;
    for (Int k = 0; k < steps; ++k) {
        Int cand = lo + cursor;
        cursor += 2;
        if (cursor >= span) {
            cursor -= span;
        }
        if (!is_probable_prime(cand)) {
            continue;
        }
        Int pc = 4 * cand - 1;
        if (!is_probable_prime(pc)) {
            continue;
        }
        r = cand;
        p = pc;
        found = true;
        break;
    }
    if (!found) {
        raise(Errc::search_exhausted, "no prime pair in the scan window");
    }

    CurveParams cp;
    cp.p = p;
    cp.r = r;
    cp.h = 4;
    cp.fe_len = fe_len_for(p);
    cp.dst_sig = kDefaultDstSig;
    cp.dst_pop = kDefaultDstPop;

    // Sample abscissas until one lands on the curve and survives
    // cofactor clearing; the result generates the order-r subgroup.
    Bytes gtag = seed_tag("toybls/params/g", seed);
    for (uint32_t j = 0; j < 512; ++j) {
        Bytes buf = gtag;
        append_u32_be(buf, j);
        Fp x(cp, int_from_bytes_be(sha256(buf)));
        auto s = fp_sqrt(x * x * x + x);
        if (!s) {
            continue;
        }
        Fp y = (s->value() <= (-*s).value()) ? *s : -*s;
        G1Point g = mul(cp.h, G1Point::affine(x, y));
        if (g.is_infinity()) {
            continue;
        }
        cp.gx = g.x().value();
        cp.gy = g.y().value();
        validate_params(cp);
        return cp;
    }
    raise(Errc::search_exhausted, "no generator found in 512 attempts");
}

void validate_params(const CurveParams& cp)
{
    if (!is_probable_prime(cp.p)) {
        raise(Errc::p_not_prime, "p fails primality");
    }
    if (cp.p % 4 != 3) {
        raise(Errc::p_not_3_mod_4, "p must be 3 mod 4");
    }
    if (!is_probable_prime(cp.r)) {
        raise(Errc::r_not_prime, "r fails primality");
    }
    if (cp.r == cp.p) {
        raise(Errc::r_equals_p, "r must differ from p");
    }
    if (cp.h * cp.r != cp.p + 1) {
        raise(Errc::cofactor_mismatch, "h * r != p + 1");
    }
    if (cp.h % cp.r == 0) {
        raise(Errc::r_divides_h, "subgroup order divides the cofactor");
    }
    if (cp.fe_len != fe_len_for(cp.p)) {
        raise(Errc::fe_len_mismatch, "fe_len does not match bitlen(p)");
    }
    if (cp.dst_sig.empty() || cp.dst_pop.empty() || cp.dst_sig == cp.dst_pop) {
        raise(Errc::dst_not_distinct, "domain tags must be nonempty and distinct");
    }
    if (cp.gx < 0 || cp.gx >= cp.p || cp.gy < 0 || cp.gy >= cp.p) {
        raise(Errc::coordinate_out_of_range, "generator coordinates outside F_p");
    }
    Fp fx(cp, cp.gx), fy(cp, cp.gy);
    if (fy * fy != fx * fx * fx + fx) {
        raise(Errc::generator_not_on_curve, "generator fails the curve equation");
    }
    G1Point g = G1Point::affine(fx, fy);
    if (!mul(cp.r, g).is_infinity() || g.is_infinity()) {
        raise(Errc::generator_wrong_order, "generator order does not divide r");
    }
    // r is prime and the generator is finite, so its order is exactly r.
}

const CurveParams& tiny_params()
{
    static const CurveParams cp = [] {
        CurveParams c;
        c.p = 19;
        c.r = 5;
        c.h = 4;
        c.gx = 5;
        c.gy = 4;
        c.fe_len = 1;
        c.dst_sig = kDefaultDstSig;
        c.dst_pop = kDefaultDstPop;
        validate_params(c);
        return c;
    }();
    return cp;
}

const CurveParams& default_params()
{
    // The output of generate_params(60, 1), pinned so library startup
    // does not repeat the prime search.
    static const CurveParams cp = [] {
        CurveParams c;
        c.p = Int("3682640722839134971");
        c.r = Int("920660180709783743");
        c.h = 4;
        c.gx = Int("3541103021044014919");
        c.gy = Int("3196839347863766277");
        c.fe_len = 9;
        c.dst_sig = kDefaultDstSig;
        c.dst_pop = kDefaultDstPop;
        validate_params(c);
        return c;
    }();
    return cp;
}

std::string params_to_text(const CurveParams& cp)
{
    std::ostringstream os;
    os << "p=" << cp.p << " r=" << cp.r << " h=" << cp.h << " gx=" << cp.gx
       << " gy=" << cp.gy << " dst_sig=" << cp.dst_sig
       << " dst_pop=" << cp.dst_pop << "\n";
    return os.str();
}

static Int parse_int(const std::string& s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        raise(Errc::parse_error, "expected a decimal integer");
    }
    return Int(s);
}

CurveParams params_from_text(const std::string& text)
{
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string token;
    while (is >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) {
            raise(Errc::parse_error, "token without '=': " + token);
        }
        kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    for (const char* key : {"p", "r", "h", "gx", "gy", "dst_sig", "dst_pop"}) {
        if (!kv.count(key)) {
            raise(Errc::parse_error, std::string("missing key: ") + key);
        }
    }
    CurveParams cp;
    cp.p = parse_int(kv["p"]);
    cp.r = parse_int(kv["r"]);
    cp.h = parse_int(kv["h"]);
    cp.gx = parse_int(kv["gx"]);
    cp.gy = parse_int(kv["gy"]);
    cp.fe_len = fe_len_for(cp.p);
    cp.dst_sig = kv["dst_sig"];
    cp.dst_pop = kv["dst_pop"];
    validate_params(cp);
    return cp;
}

}  // namespace toybls
