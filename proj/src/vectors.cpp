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

#include "toybls/vectors.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <sstream>

#include "toybls/errors.hpp"

namespace toybls {

namespace {

constexpr std::array<Policy, 3> kAllPolicies = {Policy::rfc, Policy::hardened,
                                                Policy::lenient};

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += parts[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    if (s.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

bool known_scheme(const std::string& s)
{
    return s == "basic" || s == "aug" || s == "pop";
}

bool known_op(const std::string& o)
{
    return o == "verify" || o == "aggregate_verify" ||
           o == "fast_aggregate_verify" || o == "pop_verify" ||
           o == "key_validate";
}

}  // namespace

std::string record_to_line(const VectorRecord& rec)
{
    std::ostringstream os;
    os << "scheme=" << rec.scheme << " op=" << rec.op
       << " policy=" << policy_name(rec.policy) << " pk=" << join(rec.pk)
       << " msg=" << join(rec.msg) << " sig=" << rec.sig
       << " expect=" << (rec.expect ? "true" : "false");
    return os.str();
}

VectorRecord record_from_line(const std::string& line)
{
    std::istringstream is(line);
    std::string token;
    VectorRecord rec;
    bool seen[7] = {};
    while (is >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) {
            raise(Errc::parse_error, "token without '=': " + token);
        }
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        if (key == "scheme") {
            rec.scheme = value;
            seen[0] = true;
        } else if (key == "op") {
            rec.op = value;
            seen[1] = true;
        } else if (key == "policy") {
            rec.policy = policy_from_name(value);
            seen[2] = true;
        } else if (key == "pk") {
            rec.pk = split(value);
            seen[3] = true;
        } else if (key == "msg") {
            rec.msg = split(value);
            seen[4] = true;
        } else if (key == "sig") {
            rec.sig = value;
            seen[5] = true;
        } else if (key == "expect") {
            if (value != "true" && value != "false") {
                raise(Errc::parse_error, "expect must be true or false");
            }
            rec.expect = value == "true";
            seen[6] = true;
        } else {
            raise(Errc::parse_error, "unknown key: " + key);
        }
    }
    for (bool s : seen) {
        if (!s) {
            raise(Errc::parse_error, "record is missing a required key");
        }
    }
    if (!known_scheme(rec.scheme) || !known_op(rec.op)) {
        raise(Errc::parse_error, "unknown scheme or op");
    }
    return rec;
}

bool run_record(const VectorRecord& rec, const CurveParams& cp)
{
    if (rec.op == "key_validate") {
        return key_validate(from_hex(rec.pk.at(0)), rec.policy, cp);
    }
    bool lenient = rec.policy == Policy::lenient;
    std::vector<PublicKey> pks;
    for (const std::string& hex : rec.pk) {
        try {
            Bytes raw = from_hex(hex);
            pks.push_back(PublicKey{lenient ? decode_g1_lenient(raw, cp)
                                            : decode_g1_strict(raw, cp)});
        } catch (const Error&) {
            return false;
        }
    }
    G2Point sig_pt = G2Point::infinity(cp);
    try {
        Bytes raw = from_hex(rec.sig);
        sig_pt = lenient ? decode_g2_lenient(raw, cp) : decode_g2_strict(raw, cp);
    } catch (const Error&) {
        return false;
    }
    std::vector<Bytes> msgs;
    for (const std::string& hex : rec.msg) {
        msgs.push_back(from_hex(hex));
    }
    if (rec.op == "verify") {
        if (rec.scheme == "aug") {
            return verify_aug(pks.at(0), msgs.at(0), Signature{sig_pt}, rec.policy);
        }
        return verify(pks.at(0), msgs.at(0), Signature{sig_pt}, rec.policy);
    }
    if (rec.op == "aggregate_verify") {
        if (rec.scheme == "basic") {
            return aggregate_verify_basic(pks, msgs, Signature{sig_pt}, rec.policy);
        }
        return aggregate_verify(pks, msgs, Signature{sig_pt}, rec.policy);
    }
    if (rec.op == "fast_aggregate_verify") {
        return fast_aggregate_verify(pks, msgs.at(0), Signature{sig_pt},
                                     rec.policy);
    }
    return pop_verify(pks.at(0), PopProof{sig_pt}, rec.policy);
}

namespace {

struct Corpus {
    std::vector<VectorRecord> recs;

    void add(const std::string& scheme, const std::string& op, Policy policy,
             std::vector<std::string> pk, std::vector<std::string> msg,
             std::string sig, bool expect)
    {
        recs.push_back(VectorRecord{scheme, op, policy, std::move(pk),
                                    std::move(msg), std::move(sig), expect});
    }

    void add_all_policies(const std::string& scheme, const std::string& op,
                          const std::vector<std::string>& pk,
                          const std::vector<std::string>& msg,
                          const std::string& sig, bool expect)
    {
        for (Policy p : kAllPolicies) {
            add(scheme, op, p, pk, msg, sig, expect);
        }
    }
};

}  // namespace

std::size_t emit_vectors(std::ostream& out, const CurveParams& cp,
                         const Bytes& seed)
{
    Corpus c;

    Bytes sa = seed, sb = seed, sc = seed;
    append(sa, to_bytes("/signer-a"));
    append(sb, to_bytes("/signer-b"));
    append(sc, to_bytes("/signer-c"));
    SecretKey ska = keygen(sa, cp), skb = keygen(sb, cp), skc = keygen(sc, cp);
    PublicKey pka = sk_to_pk(ska), pkb = sk_to_pk(skb), pkc = sk_to_pk(skc);
    std::string ha = to_hex(encode(pka.point, true));
    std::string hb = to_hex(encode(pkb.point, true));
    std::string hc = to_hex(encode(pkc.point, true));

    Bytes m1 = to_bytes("vector message one");
    Bytes m2 = to_bytes("vector message two");
    Bytes m3 = to_bytes("vector message three");
    std::string h1 = to_hex(m1), h2 = to_hex(m2), h3 = to_hex(m3);

    // Basic scheme: a single signature and a distinct-message aggregate.
    Signature sig_a1 = sign(ska, m1);
    std::string hsig_a1 = to_hex(encode(sig_a1.point, true));
    c.add_all_policies("basic", "verify", {ha}, {h1}, hsig_a1, true);
    c.add_all_policies("basic", "verify", {ha}, {h2}, hsig_a1, false);

    Signature agg_ab = aggregate({sign(ska, m1), sign(skb, m2)});
    std::string hagg_ab = to_hex(encode(agg_ab.point, true));
    c.add_all_policies("basic", "aggregate_verify", {ha, hb}, {h1, h2}, hagg_ab,
                       true);
    Signature agg_same = aggregate({sign(ska, m1), sign(skb, m1)});
    c.add_all_policies("basic", "aggregate_verify", {ha, hb}, {h1, h1},
                       to_hex(encode(agg_same.point, true)), false);

    // Augmentation scheme: the signer's key is folded into the digest, so
    // the same signature fails under any other key.
    Signature aug_a = sign_aug(ska, m1);
    std::string haug_a = to_hex(encode(aug_a.point, true));
    c.add_all_policies("aug", "verify", {ha}, {h1}, haug_a, true);
    c.add_all_policies("aug", "verify", {hb}, {h1}, haug_a, false);

    // Proof-of-possession scheme.
    PopProof pop_a = pop_prove(ska), pop_b = pop_prove(skb);
    c.add_all_policies("pop", "pop_verify", {ha}, {},
                       to_hex(encode(pop_a.point, true)), true);
    c.add_all_policies("pop", "pop_verify", {ha}, {},
                       to_hex(encode(pop_b.point, true)), false);
    Signature fast_abc =
        aggregate({sign(ska, m3), sign(skb, m3), sign(skc, m3)});
    c.add_all_policies("pop", "fast_aggregate_verify", {ha, hb, hc}, {h3},
                       to_hex(encode(fast_abc.point, true)), true);
    c.add_all_policies("pop", "aggregate_verify", {hb, hc}, {h2, h3},
                       to_hex(encode(aggregate({sign(skb, m2), sign(skc, m3)}).point,
                                     true)),
                       true);

    // Key admission.
    c.add_all_policies("pop", "key_validate", {ha}, {}, "", true);
    std::string canonical_inf = to_hex(encode(G1Point::infinity(cp), true));
    c.add_all_policies("pop", "key_validate", {canonical_inf}, {}, "", false);
    for (uint8_t u : scan_infinity_aliases(cp)) {
        Bytes alias(cp.fe_len, 0);
        alias[0] = u;
        bool canonical = alias == encode(G1Point::infinity(cp), true);
        c.add("pop", "key_validate", Policy::lenient, {to_hex(alias)}, {}, "",
              !canonical);
        c.add("pop", "key_validate", Policy::rfc, {to_hex(alias)}, {}, "", false);
        c.add("pop", "key_validate", Policy::hardened, {to_hex(alias)}, {}, "",
              false);
    }

    // The attack catalog, expanded check by check.
    Bytes attack_seed = seed;
    append(attack_seed, to_bytes("/attacks"));
    for (const AttackWitness& w : all_witnesses(attack_seed, cp)) {
        for (const WitnessCheck& chk : w.checks) {
            c.add("pop", chk.entry, chk.policy, chk.pks, chk.msgs, chk.sig,
                  chk.expect);
        }
    }

    out << "# toybls verification vectors\n";
    out << "# params: p=" << cp.p << " r=" << cp.r << "\n";
    out << "# seed: " << to_hex(seed) << "\n";
    for (const VectorRecord& rec : c.recs) {
        out << record_to_line(rec) << "\n";
    }
    if (!out) {
        raise(Errc::io_error, "writing vectors failed");
    }
    return c.recs.size();
}

CheckResult check_vectors(std::istream& in, const CurveParams& cp,
                          std::optional<Policy> policy_override)
{
    CheckResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view trimmed = line;
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) {
            trimmed.remove_prefix(1);
        }
        if (trimmed.empty() || trimmed.front() == '#') {
            continue;
        }
        VectorRecord rec;
        try {
            rec = record_from_line(line);
        } catch (const Error& e) {
            raise(Errc::parse_error,
                  "line " + std::to_string(line_no) + ": " + e.what());
        }
        if (policy_override) {
            rec.policy = *policy_override;
        }
        bool actual = run_record(rec, cp);
        ++result.total;
        if (actual != rec.expect) {
            result.failures.push_back(
                CheckFailure{line_no, line, rec.expect, actual});
        }
    }
    return result;
}

}  // namespace toybls
