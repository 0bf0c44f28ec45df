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

#include "toybls/attacks.hpp"

#include <optional>

#include "toybls/errors.hpp"

namespace toybls {

namespace {

Bytes tagged(const Bytes& seed, const std::string& tag)
{
    Bytes out = seed;
    append(out, to_bytes(tag));
    return out;
}

Bytes counted(const Bytes& seed, uint32_t a, uint32_t b)
{
    Bytes out = seed;
    append_u32_be(out, a);
    append_u32_be(out, b);
    return out;
}

std::string hex_point(const G1Point& p)
{
    return to_hex(encode(p, true));
}

std::string hex_point(const G2Point& p)
{
    return to_hex(encode(p, true));
}

std::string hex_scalar(const SecretKey& sk)
{
    return to_hex(int_to_bytes_be(sk.x, sk.cp->fe_len));
}

std::optional<G1Point> decode_pk(const std::string& hex, Policy policy,
                                 const CurveParams& cp)
{
    try {
        Bytes raw = from_hex(hex);
        return policy == Policy::lenient ? decode_g1_lenient(raw, cp)
                                         : decode_g1_strict(raw, cp);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<G2Point> decode_sig(const std::string& hex, Policy policy,
                                  const CurveParams& cp)
{
    try {
        Bytes raw = from_hex(hex);
        return policy == Policy::lenient ? decode_g2_lenient(raw, cp)
                                         : decode_g2_strict(raw, cp);
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

SplitZeroSet make_split_zero_set(std::size_t n, const Bytes& seed,
                                 const CurveParams& cp)
{
    if (n < 2) {
        raise(Errc::config_invalid, "a zero-sum set needs at least two keys");
    }
    SplitZeroSet set;
    for (uint32_t attempt = 0;; ++attempt) {
        set.sks.clear();
        Int sum = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            SecretKey sk = keygen(counted(seed, attempt, static_cast<uint32_t>(i)), cp);
            sum += sk.x;
            set.sks.push_back(sk);
        }
        Int last = (cp.r - sum % cp.r) % cp.r;
        if (last == 0) {
            continue;
        }
        set.sks.push_back(SecretKey{&cp, last});
        break;
    }
    for (const SecretKey& sk : set.sks) {
        set.pks.push_back(sk_to_pk(sk));
        set.pops.push_back(pop_prove(sk));
    }
    return set;
}

bool run_check(const WitnessCheck& check, const CurveParams& cp)
{
    if (check.entry == "key_validate") {
        return key_validate(from_hex(check.pks.at(0)), check.policy, cp);
    }
    auto sig = decode_sig(check.sig, check.policy, cp);
    if (!sig) {
        return false;
    }
    std::vector<PublicKey> pks;
    for (const std::string& hex : check.pks) {
        auto pk = decode_pk(hex, check.policy, cp);
        if (!pk) {
            return false;
        }
        pks.push_back(PublicKey{*pk});
    }
    std::vector<Bytes> msgs;
    for (const std::string& hex : check.msgs) {
        msgs.push_back(from_hex(hex));
    }
    if (check.entry == "verify") {
        return verify(pks.at(0), msgs.at(0), Signature{*sig}, check.policy);
    }
    if (check.entry == "aggregate_verify") {
        return aggregate_verify(pks, msgs, Signature{*sig}, check.policy);
    }
    if (check.entry == "fast_aggregate_verify") {
        return fast_aggregate_verify(pks, msgs.at(0), Signature{*sig},
                                     check.policy);
    }
    if (check.entry == "pop_verify") {
        return pop_verify(pks.at(0), PopProof{*sig}, check.policy);
    }
    raise(Errc::parse_error, "unknown entry point: " + check.entry);
}

bool replay(const AttackWitness& w, const CurveParams& cp)
{
    for (const WitnessCheck& check : w.checks) {
        if (run_check(check, cp) != check.expect) {
            return false;
        }
    }
    return true;
}

AttackWitness forge_aggregate_witness(const Bytes& seed, const Bytes& honest_msg,
                                      const Bytes& forged_msg,
                                      const CurveParams& cp)
{
    SecretKey honest = keygen(tagged(seed, "/honest"), cp);
    PublicKey x3 = sk_to_pk(honest);
    Signature sig3 = sign(honest, honest_msg);

    // The interleaved aggregate walks through partial sums X1, X1 + X3,
    // X1 + X3 + X2; redraw the pair in the freak case a prefix hits the
    // identity.
    SplitZeroSet pair = make_split_zero_set(2, tagged(seed, "/pair"), cp);
    for (uint32_t attempt = 1; (pair.pks[0].point + x3.point).is_infinity();
         ++attempt) {
        pair = make_split_zero_set(
            2, counted(tagged(seed, "/pair"), 0xFFFF, attempt), cp);
    }

    Bytes retargeted = forged_msg;
    append(retargeted, to_bytes("/retargeted"));

    std::string m_hex = to_hex(forged_msg);
    std::string m3_hex = to_hex(honest_msg);
    std::string m2_hex = to_hex(retargeted);
    std::vector<std::string> pks = {hex_point(pair.pks[0].point),
                                    hex_point(x3.point),
                                    hex_point(pair.pks[1].point)};
    std::string sig_hex = hex_point(sig3.point);

    AttackWitness w;
    w.name = "splitting-zero-aggregate";
    w.description =
        "A key pair summing to the identity rides along in an aggregate: the "
        "honest signature alone satisfies the whole check, crediting the pair "
        "with a message it never signed, and the claimed message can be "
        "swapped at will.";
    w.inputs = {
        {"sk1", hex_scalar(pair.sks[0])},
        {"sk2", hex_scalar(pair.sks[1])},
        {"pk1", pks[0]},
        {"pk2", pks[2]},
        {"honest_pk", pks[1]},
        {"honest_msg", m3_hex},
        {"forged_msg", m_hex},
        {"retargeted_msg", m2_hex},
        {"sig", sig_hex},
    };
    w.checks = {
        {"aggregate_verify", Policy::rfc, pks, {m_hex, m3_hex, m_hex}, sig_hex, true},
        {"aggregate_verify", Policy::lenient, pks, {m_hex, m3_hex, m_hex}, sig_hex, true},
        {"aggregate_verify", Policy::hardened, pks, {m_hex, m3_hex, m_hex}, sig_hex, false},
        {"aggregate_verify", Policy::rfc, pks, {m2_hex, m3_hex, m2_hex}, sig_hex, true},
        {"aggregate_verify", Policy::hardened, pks, {m2_hex, m3_hex, m2_hex}, sig_hex, false},
    };
    return w;
}

AttackWitness consensus_divergence_witness(const Bytes& seed, const Bytes& msg,
                                           const CurveParams& cp)
{
    SplitZeroSet pair = make_split_zero_set(2, tagged(seed, "/pair"), cp);
    std::vector<std::string> pks = {hex_point(pair.pks[0].point),
                                    hex_point(pair.pks[1].point)};
    std::string inf_sig = to_hex(encode(G2Point::infinity(cp), true));
    Bytes alt1 = tagged(msg, "/alternative-1");
    Bytes alt2 = tagged(msg, "/alternative-2");
    std::string m_hex = to_hex(msg);

    AttackWitness w;
    w.name = "consensus-divergence";
    w.description =
        "For a zero-sum key pair and the identity signature, "
        "fast_aggregate_verify rejects (KeyValidate sees the identity "
        "aggregate) while aggregate_verify accepts the same inputs, so two "
        "conforming verifiers split on one observation; a lenient verifier "
        "even accepts any message.";
    w.inputs = {
        {"sk1", hex_scalar(pair.sks[0])},
        {"sk2", hex_scalar(pair.sks[1])},
        {"pk1", pks[0]},
        {"pk2", pks[1]},
        {"msg", m_hex},
        {"sig", inf_sig},
    };
    w.checks = {
        {"fast_aggregate_verify", Policy::rfc, pks, {m_hex}, inf_sig, false},
        {"aggregate_verify", Policy::rfc, pks, {m_hex, m_hex}, inf_sig, true},
        {"fast_aggregate_verify", Policy::lenient, pks, {m_hex}, inf_sig, true},
        {"fast_aggregate_verify", Policy::lenient, pks, {to_hex(alt1)}, inf_sig, true},
        {"fast_aggregate_verify", Policy::lenient, pks, {to_hex(alt2)}, inf_sig, true},
        {"fast_aggregate_verify", Policy::hardened, pks, {m_hex}, inf_sig, false},
        {"aggregate_verify", Policy::hardened, pks, {m_hex, m_hex}, inf_sig, false},
    };
    return w;
}

AttackWitness rogue_public_key_witness(const Bytes& victim_seed, const Bytes& msg,
                                       const CurveParams& cp)
{
    SecretKey victim = keygen(victim_seed, cp);
    PublicKey x1 = sk_to_pk(victim);
    // Publish x2*G - X1 so the two keys aggregate to x2*G, which the
    // attacker controls outright. Redraw x2 if it collides with the
    // victim's scalar, which would leave the rogue key at infinity.
    SecretKey attacker = keygen(tagged(victim_seed, "/attacker"), cp);
    G1Point rogue = mul(attacker.x, g1_generator(cp)) + (-x1.point);
    for (uint32_t attempt = 0; rogue.is_infinity(); ++attempt) {
        attacker = keygen(counted(tagged(victim_seed, "/attacker"), 0xFFFF, attempt), cp);
        rogue = mul(attacker.x, g1_generator(cp)) + (-x1.point);
    }
    Signature forged{mul(attacker.x, hash_to_g2(msg, to_bytes(cp.dst_sig), cp))};
    Bytes rogue_bytes = encode(rogue, true);
    PopProof fake_pop{
        mul(attacker.x, hash_to_g2(rogue_bytes, to_bytes(cp.dst_pop), cp))};
    PopProof honest_pop = pop_prove(victim);

    std::string m_hex = to_hex(msg);
    std::vector<std::string> pair = {hex_point(x1.point), to_hex(rogue_bytes)};

    AttackWitness w;
    w.name = "rogue-public-key";
    w.description =
        "The attacker registers x2*G - X1 and signs alone for the pair; no "
        "verification policy can tell, because the aggregate really is "
        "x2*G. Registration fails instead: the rogue key's possession proof "
        "checks e(pk, H_pop(pk)) and the attacker does not know the rogue "
        "key's scalar.";
    w.inputs = {
        {"victim_pk", pair[0]},
        {"rogue_pk", pair[1]},
        {"msg", m_hex},
        {"forged_sig", hex_point(forged.point)},
        {"fake_pop", hex_point(fake_pop.point)},
        {"victim_pop", hex_point(honest_pop.point)},
    };
    std::string forged_hex = hex_point(forged.point);
    std::string fake_pop_hex = hex_point(fake_pop.point);
    w.checks = {
        {"fast_aggregate_verify", Policy::rfc, pair, {m_hex}, forged_hex, true},
        {"fast_aggregate_verify", Policy::hardened, pair, {m_hex}, forged_hex, true},
        {"fast_aggregate_verify", Policy::lenient, pair, {m_hex}, forged_hex, true},
        {"pop_verify", Policy::rfc, {pair[1]}, {}, fake_pop_hex, false},
        {"pop_verify", Policy::hardened, {pair[1]}, {}, fake_pop_hex, false},
        {"pop_verify", Policy::lenient, {pair[1]}, {}, fake_pop_hex, false},
        {"pop_verify", Policy::rfc, {pair[0]}, {}, hex_point(honest_pop.point), true},
    };
    return w;
}

AttackWitness encoding_bypass_witness(const CurveParams& cp)
{
    Bytes bypass_pk(cp.fe_len, 0);
    bypass_pk[0] = kFlagInfinity;
    Bytes bypass_sig(2 * cp.fe_len, 0);
    bypass_sig[0] = kFlagInfinity;
    Bytes canonical = encode(G1Point::infinity(cp), true);
    Bytes msg = to_bytes("any message at all");

    std::vector<uint8_t> aliases = scan_infinity_aliases(cp);
    std::string alias_list;
    for (uint8_t u : aliases) {
        if (!alias_list.empty()) {
            alias_list += ",";
        }
        alias_list += to_hex({u});
    }

    std::string bp = to_hex(bypass_pk);
    std::string bs = to_hex(bypass_sig);
    std::string m_hex = to_hex(msg);

    AttackWitness w;
    w.name = "encoding-bypass";
    w.description =
        "An identity public key spelled with the infinity bit but without "
        "the compression bit evades a byte-compare against the canonical "
        "pattern, yet a lenient decoder still reads it as the identity, so "
        "the all-accepting key re-enters through the front door.";
    w.inputs = {
        {"bypass_pk", bp},
        {"bypass_sig", bs},
        {"canonical_infinity", to_hex(canonical)},
        {"lenient_infinity_first_bytes", alias_list},
        {"msg", m_hex},
    };
    w.checks = {
        {"key_validate", Policy::lenient, {bp}, {}, "", true},
        {"key_validate", Policy::rfc, {bp}, {}, "", false},
        {"key_validate", Policy::hardened, {bp}, {}, "", false},
        {"key_validate", Policy::lenient, {to_hex(canonical)}, {}, "", false},
        {"key_validate", Policy::rfc, {to_hex(canonical)}, {}, "", false},
        {"verify", Policy::lenient, {bp}, {m_hex}, bs, true},
        {"verify", Policy::rfc, {bp}, {m_hex}, bs, false},
        {"verify", Policy::hardened, {bp}, {m_hex}, bs, false},
        {"pop_verify", Policy::lenient, {bp}, {}, bs, true},
        {"pop_verify", Policy::hardened, {bp}, {}, bs, false},
    };
    return w;
}

AttackWitness key_binding_witness(const Bytes& seed, const Bytes& msg,
                                  const CurveParams& cp)
{
    SecretKey signer = keygen(tagged(seed, "/signer"), cp);
    PublicKey x = sk_to_pk(signer);
    SplitZeroSet pair = make_split_zero_set(2, tagged(seed, "/pair"), cp);
    Signature sig = sign(signer, msg);
    Bytes altered = tagged(msg, "/altered");

    std::vector<std::string> trio = {hex_point(pair.pks[0].point),
                                     hex_point(x.point),
                                     hex_point(pair.pks[1].point)};
    std::string m_hex = to_hex(msg);
    std::string alt_hex = to_hex(altered);
    std::string sig_hex = hex_point(sig.point);

    AttackWitness w;
    w.name = "key-binding-gap";
    w.description =
        "Inserting a zero-sum pair beside an honest signer changes nothing: "
        "the aggregate key collapses back to the signer's key, so every "
        "policy accepts, while any altered message still fails. The "
        "signature binds its message but not the claimed signer set.";
    w.inputs = {
        {"signer_pk", trio[1]},
        {"pk1", trio[0]},
        {"pk2", trio[2]},
        {"msg", m_hex},
        {"altered_msg", alt_hex},
        {"sig", sig_hex},
    };
    w.checks = {
        {"fast_aggregate_verify", Policy::rfc, trio, {m_hex}, sig_hex, true},
        {"fast_aggregate_verify", Policy::hardened, trio, {m_hex}, sig_hex, true},
        {"fast_aggregate_verify", Policy::lenient, trio, {m_hex}, sig_hex, true},
        {"fast_aggregate_verify", Policy::rfc, trio, {alt_hex}, sig_hex, false},
        {"fast_aggregate_verify", Policy::hardened, trio, {alt_hex}, sig_hex, false},
        {"fast_aggregate_verify", Policy::lenient, trio, {alt_hex}, sig_hex, false},
        {"fast_aggregate_verify", Policy::rfc, {trio[1]}, {m_hex}, sig_hex, true},
        {"verify", Policy::rfc, {trio[1]}, {m_hex}, sig_hex, true},
    };
    return w;
}

std::vector<AttackWitness> all_witnesses(const Bytes& seed,
                                         const CurveParams& cp)
{
    std::vector<AttackWitness> out;
    out.push_back(forge_aggregate_witness(tagged(seed, "/1"),
                                          to_bytes("message the honest party signed"),
                                          to_bytes("message nobody signed"), cp));
    out.push_back(consensus_divergence_witness(tagged(seed, "/2"),
                                               to_bytes("disputed payload"), cp));
    out.push_back(rogue_public_key_witness(tagged(seed, "/3"),
                                           to_bytes("two-party statement"), cp));
    out.push_back(encoding_bypass_witness(cp));
    out.push_back(key_binding_witness(tagged(seed, "/5"),
                                      to_bytes("attested payload"), cp));
    return out;
}

std::vector<uint8_t> scan_infinity_aliases(const CurveParams& cp)
{
    std::vector<uint8_t> out;
    for (unsigned u = 0; u < 256; ++u) {
        Bytes b(cp.fe_len, 0);
        b[0] = static_cast<uint8_t>(u);
        try {
            if (decode_g1_lenient(b, cp).is_infinity()) {
                out.push_back(static_cast<uint8_t>(u));
            }
        } catch (const Error&) {
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> scan_zero_sum_subsets(
    const std::vector<PublicKey>& pks, std::size_t max_subset)
{
    if (pks.size() > 24) {
        raise(Errc::too_many_keys, "subset scan is exponential; 24 keys max");
    }
    std::vector<std::vector<std::size_t>> found;
    if (pks.empty() || max_subset == 0) {
        return found;
    }
    const CurveParams& cp = pks[0].point.params();
    std::vector<std::size_t> current;
    auto walk = [&](auto&& self, std::size_t start, const G1Point& sum) -> void {
        for (std::size_t i = start; i < pks.size(); ++i) {
            current.push_back(i);
            G1Point next = sum + pks[i].point;
            if (next.is_infinity()) {
                found.push_back(current);
            }
            if (current.size() < max_subset) {
                self(self, i + 1, next);
            }
            current.pop_back();
        }
    };
    walk(walk, 0, G1Point::infinity(cp));
    return found;
}

}  // namespace toybls
