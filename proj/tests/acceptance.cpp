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

// End-to-end checks, one per headline property of the library. Each
// prints a single [PASS]/[FAIL] line; the exit status is the number of
// failures.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "toybls/attacks.hpp"
#include "toybls/errors.hpp"
#include "toybls/sim.hpp"
#include "toybls/vectors.hpp"

using namespace toybls;

namespace {

struct Criterion {
    std::string name;
    std::function<void()> run;
};

struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw CheckError(what);
    }
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// A colluding pair whose keys cancel rides along in a three-party
// aggregate; the honest member's lone signature then vouches for a
// message the pair never signed.
void check_zero_sum_forgery()
{
    const CurveParams& cp = default_params();
    auto start = std::chrono::steady_clock::now();

    for (int trial = 0; trial < 20; ++trial) {
        Bytes seed = to_bytes("zero-sum-trial-" + std::to_string(trial));
        SplitZeroSet pair = make_split_zero_set(2, seed, cp);
        require(pair.sks[1].x == (cp.r - pair.sks[0].x) % cp.r,
                "pair scalars must cancel exactly");

        Bytes honest_seed = seed;
        append(honest_seed, to_bytes("/honest"));
        SecretKey honest = keygen(honest_seed, cp);
        PublicKey x3 = sk_to_pk(honest);
        if ((pair.pks[0].point + x3.point).is_infinity()) {
            continue;   // freak prefix cancellation; the point stands without it
        }

        Bytes m3 = to_bytes("statement the honest party made");
        Bytes m = to_bytes("statement nobody made, trial " + std::to_string(trial));
        Signature sig3 = sign(honest, m3);

        std::vector<PublicKey> pks{pair.pks[0], x3, pair.pks[1]};
        std::vector<Bytes> msgs{m, m3, m};
        require(aggregate_verify(pks, msgs, sig3, Policy::rfc),
                "rfc accepts the interleaved aggregate");
        require(aggregate_verify(pks, msgs, sig3, Policy::lenient),
                "lenient accepts the interleaved aggregate");
        require(!aggregate_verify(pks, msgs, sig3, Policy::hardened),
                "hardened rejects the interleaved aggregate");
    }
    require(seconds_since(start) < 5.0, "20 trials finish inside 5 seconds");
}

// The same key material drives the two aggregate entry points to
// opposite verdicts, and a lenient verifier accepts any message.
void check_consensus_divergence()
{
    const CurveParams& cp = default_params();
    SplitZeroSet pair = make_split_zero_set(2, to_bytes("divergence"), cp);
    Signature inf_sig{G2Point::infinity(cp)};
    Bytes m = to_bytes("the disputed message");

    require(!fast_aggregate_verify(pair.pks, m, inf_sig, Policy::rfc),
            "the one-pairing path rejects under rfc");
    require(aggregate_verify(pair.pks, {m, m}, inf_sig, Policy::rfc),
            "the general path accepts the same inputs under rfc");
    for (int i = 0; i < 3; ++i) {
        Bytes any = to_bytes("arbitrary claim " + std::to_string(i));
        require(fast_aggregate_verify(pair.pks, any, inf_sig, Policy::lenient),
                "lenient accepts the identity signature on any message");
    }
}

// Non-canonical identity encodings: the naive byte compare misses them,
// the strict decoder refuses them, the lenient decoder lets them in.
void check_infinity_encoding_audit()
{
    const CurveParams& cp = default_params();
    std::vector<uint8_t> aliases = scan_infinity_aliases(cp);
    std::set<uint8_t> alias_set(aliases.begin(), aliases.end());
    require(alias_set.size() >= 2, "more than one first byte spells infinity");
    require(alias_set.count(0xc0) == 1, "the canonical first byte is found");
    require(alias_set.count(0x40) == 1, "the flag-swapped first byte is found");

    for (unsigned u = 0; u < 256; ++u) {
        Bytes b(cp.fe_len, 0);
        b[0] = static_cast<uint8_t>(u);
        require(is_infinity_bytes_naive(b) == (u == 0xc0),
                "the naive probe matches exactly the canonical first byte");
        bool strict_ok = true;
        try {
            decode_g1_strict(b, cp);
        } catch (const Error&) {
            strict_ok = false;
        }
        require(strict_ok == (u == 0xc0),
                "the strict decoder admits only the canonical first byte");
    }

    Bytes bypass_pk(cp.fe_len, 0);
    bypass_pk[0] = 0x40;
    Bytes bypass_sig(2 * cp.fe_len, 0);
    bypass_sig[0] = 0x40;
    require(!is_infinity_bytes_naive(bypass_pk),
            "the naive probe misses the flag-swapped identity");
    PublicKey pk{decode_g1_lenient(bypass_pk, cp)};
    Signature sig{decode_g2_lenient(bypass_sig, cp)};
    require(pk.point.is_infinity() && sig.point.is_infinity(),
            "the lenient decoder maps both encodings to the identity");

    std::mt19937_64 rng(41);
    for (int i = 0; i < 10; ++i) {
        Bytes m = to_bytes("random message " + std::to_string(rng()));
        require(verify(pk, m, sig, Policy::lenient),
                "the smuggled identity key verifies every message leniently");
    }
    require(pop_verify(pk, PopProof{sig.point}, Policy::lenient),
            "the smuggled identity key even proves possession leniently");
}

// Possession proofs succeed for everyone who holds a scalar, including
// every member of a cancelling set, and fail for a rogue aggregate key.
void check_possession_proofs()
{
    const CurveParams& cp = default_params();
    for (int i = 0; i < 50; ++i) {
        SecretKey sk = keygen(to_bytes("pop-holder-" + std::to_string(i)), cp);
        PopProof pop = pop_prove(sk);
        for (Policy pol : {Policy::rfc, Policy::hardened, Policy::lenient}) {
            require(pop_verify(sk_to_pk(sk), pop, pol),
                    "a held key proves possession");
        }
    }

    for (std::size_t n = 2; n <= 5; ++n) {
        SplitZeroSet set =
            make_split_zero_set(n, to_bytes("pop-set-" + std::to_string(n)), cp);
        G1Point sum = G1Point::infinity(cp);
        for (std::size_t i = 0; i < n; ++i) {
            sum = sum + set.pks[i].point;
            require(pop_verify(set.pks[i], set.pops[i], Policy::hardened),
                    "every colluder holds its own scalar");
        }
        require(sum.is_infinity(), "the set's keys cancel");
    }

    AttackWitness rogue = rogue_public_key_witness(
        to_bytes("pop-rogue"), to_bytes("two-party payload"), cp);
    require(replay(rogue, cp),
            "the rogue key forges the aggregate but fails registration");
}

// Inserting a cancelling pair next to an honest signer changes no
// verdict under any policy: the signature binds the message, not the
// claimed signer set.
void check_key_binding_gap()
{
    const CurveParams& cp = default_params();
    AttackWitness w = key_binding_witness(to_bytes("binding"),
                                          to_bytes("attested payload"), cp);
    require(replay(w, cp), "the witness replays to its pinned verdicts");

    SecretKey signer = keygen(to_bytes("binding-direct"), cp);
    SplitZeroSet pair = make_split_zero_set(2, to_bytes("binding-pair"), cp);
    Bytes m = to_bytes("direct payload");
    Signature sig = sign(signer, m);
    std::vector<PublicKey> trio{pair.pks[0], sk_to_pk(signer), pair.pks[1]};
    for (Policy pol : {Policy::rfc, Policy::hardened, Policy::lenient}) {
        require(fast_aggregate_verify(trio, m, sig, pol),
                "the padded committee verifies under every policy");
        require(!fast_aggregate_verify(trio, to_bytes("altered"), sig, pol),
                "an altered message still fails");
    }
    require(fast_aggregate_verify({sk_to_pk(signer)}, m, sig, Policy::rfc)
                == fast_aggregate_verify(trio, m, sig, Policy::rfc),
            "the pair's presence is invisible to the verdict");
}

// The full protocol consequence: one aggregate signature shows a
// different block to every honest node, unless the nodes harden.
void check_split_view_simulation()
{
    const CurveParams& cp = default_params();
    SimConfig cfg;
    cfg.n_honest_nodes = 3;
    cfg.colluder_count = 2;
    cfg.honest_block = to_bytes("the honest block");
    cfg.forged_blocks = {to_bytes("view 0"), to_bytes("view 1"),
                         to_bytes("view 2")};
    cfg.policy = Policy::rfc;
    cfg.seed = to_bytes("acceptance-sim");

    SimReport rfc_report = run_split_view(cfg, cp);
    require(rfc_report.divergence == 3,
            "rfc nodes accept three different blocks");
    std::set<std::string> accepted;
    for (const NodeOutcome& n : rfc_report.nodes) {
        require(n.verdict, "every rfc node accepts its claimed list");
        accepted.insert(n.accepted_hex);
    }
    require(accepted.size() == 3, "the accepted blocks are pairwise distinct");

    Bytes proposer_seed = cfg.seed;
    append(proposer_seed, to_bytes("/honest-proposer"));
    Signature honest_sig = sign(keygen(proposer_seed, cp), cfg.honest_block);
    require(rfc_report.aggregate_signature_hex
                == to_hex(encode(honest_sig.point, true)),
            "one signature, the honest proposer's own, backs all views");

    cfg.policy = Policy::hardened;
    SimReport hard_report = run_split_view(cfg, cp);
    require(hard_report.divergence == 1, "hardened nodes stay in agreement");
    for (const NodeOutcome& n : hard_report.nodes) {
        require(!n.verdict, "hardened nodes reject the claimed lists");
        require(n.accepted_hex == to_hex(cfg.honest_block),
                "hardened nodes fall back to the honest block");
    }

    cfg.policy = Policy::rfc;
    require(run_split_view(cfg, cp).to_text() == run_split_view(cfg, cp).to_text(),
            "the simulation is deterministic");
}

// The pairing itself: bilinear, non-degenerate, exhaustively on the
// 19-point curve and sampled on the default one.
void check_pairing_laws()
{
    auto start = std::chrono::steady_clock::now();

    const CurveParams& tiny = tiny_params();
    G1Point tg = g1_generator(tiny);
    GtElement tbase = pairing(tg, distort(tg));
    require(!tbase.is_one(), "the tiny pairing is non-degenerate");
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            require(pairing(mul(a, tg), distort(mul(b, tg)))
                        == gt_pow(tbase, Int(a) * b % tiny.r),
                    "tiny pairing table entry matches");
        }
    }

    const CurveParams& cp = default_params();
    G1Point g = g1_generator(cp);
    GtElement base = pairing(g, distort(g));
    require(!base.is_one(), "the default pairing is non-degenerate");
    require(gt_pow(base, cp.r).is_one(), "the default pairing has order r");
    require(pairing(G1Point::infinity(cp), distort(g)).is_one(),
            "the identity pairs to one on the left");
    require(pairing(g, G2Point::infinity(cp)).is_one(),
            "the identity pairs to one on the right");

    std::mt19937_64 rng(43);
    auto rand_scalar = [&] { return ((Int(rng()) << 64) + rng()) % cp.r; };
    for (int i = 0; i < 100; ++i) {
        Int a = rand_scalar(), b = rand_scalar();
        require(pairing(mul(a, g), distort(mul(b, g)))
                    == gt_pow(base, a * b % cp.r),
                "random bilinearity holds");
    }
    require(seconds_since(start) < 30.0, "pairing checks finish inside 30 seconds");
}

// Serialization: strict decode inverts encode in both forms, the three
// flag bits behave, and the emitted vector corpus replays clean.
void check_serialization_and_vectors()
{
    const CurveParams& cp = default_params();
    G1Point g = g1_generator(cp);
    std::mt19937_64 rng(47);
    std::size_t round_trips = 0;
    for (int i = 0; i < 50; ++i) {
        Int k = 1 + ((Int(rng()) << 64) + rng()) % (cp.r - 1);
        G1Point p1 = mul(k, g);
        G2Point p2 = distort(mul(k + 1, g));
        require(decode_g1_strict(encode(p1, true), cp) == p1, "g1 compressed");
        require(decode_g1_strict(encode(p1, false), cp) == p1, "g1 uncompressed");
        require(decode_g2_strict(encode(p2, true), cp) == p2, "g2 compressed");
        require(decode_g2_strict(encode(p2, false), cp) == p2, "g2 uncompressed");
        round_trips += 4;
    }
    require(round_trips == 200, "two hundred round trips ran");

    // All eight values of the flag bits on one compressed encoding:
    // the canonical byte decodes to the point, the sort-flipped byte to
    // its negation, everything else is rejected.
    G1Point p = mul(12345, g);
    Bytes enc = encode(p, true);
    int decoded = 0, rejected = 0;
    for (int flags = 0; flags < 8; ++flags) {
        Bytes mutated = enc;
        mutated[0] = static_cast<uint8_t>((flags << 5) | (enc[0] & 0x1f));
        try {
            G1Point q = decode_g1_strict(mutated, cp);
            ++decoded;
            require(q == p || q == -p, "a decodable mutation is the point or "
                                       "its negation");
            if (mutated[0] == enc[0]) {
                require(q == p, "the canonical flags decode to the point");
            }
        } catch (const Error&) {
            ++rejected;
        }
    }
    require(decoded == 2 && rejected == 6,
            "exactly the two finite compressed patterns decode");

    std::ostringstream out;
    std::size_t n = emit_vectors(out, cp, to_bytes("acceptance vectors"));
    require(n >= 40, "the corpus holds at least forty records");
    std::istringstream in(out.str());
    CheckResult result = check_vectors(in, cp, std::nullopt);
    require(result.total == n, "every record was checked");
    require(result.failures.empty(), "every record replays to its verdict");
}

}  // namespace

int main()
{
    std::vector<Criterion> criteria = {
        {"zero-sum pair forges an aggregate under rfc, hardened refuses",
         check_zero_sum_forgery},
        {"aggregate entry points disagree on the identity signature",
         check_consensus_divergence},
        {"non-canonical infinity evades naive and lenient checks only",
         check_infinity_encoding_audit},
        {"possession proofs pass for scalar holders, fail for rogue keys",
         check_possession_proofs},
        {"a cancelling pair is invisible to every verification policy",
         check_key_binding_gap},
        {"one aggregate signature splits the view of an rfc committee",
         check_split_view_simulation},
        {"the pairing is bilinear and non-degenerate on both curves",
         check_pairing_laws},
        {"serialization round-trips strictly and the vector corpus replays",
         check_serialization_and_vectors},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string verdict = "[PASS]";
        std::string detail;
        try {
            criteria[i].run();
        } catch (const std::exception& e) {
            verdict = "[FAIL]";
            detail = std::string(" (") + e.what() + ")";
            ++failures;
        }
        std::printf("%s criterion %zu: %s%s\n", verdict.c_str(), i + 1,
                    criteria[i].name.c_str(), detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures;
}
