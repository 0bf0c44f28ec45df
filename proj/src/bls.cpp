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

#include "toybls/bls.hpp"

#include <set>

#include "toybls/errors.hpp"

namespace toybls {

const char* policy_name(Policy p)
{
    switch (p) {
    case Policy::rfc: return "rfc";
    case Policy::hardened: return "hardened";
    case Policy::lenient: return "lenient";
    }
    return "unknown";
}

Policy policy_from_name(const std::string& name)
{
    if (name == "rfc") return Policy::rfc;
    if (name == "hardened") return Policy::hardened;
    if (name == "lenient") return Policy::lenient;
    raise(Errc::parse_error, "unknown policy: " + name);
}

static G2Point hash_sig(const Bytes& msg, const CurveParams& cp)
{
    return hash_to_g2(msg, to_bytes(cp.dst_sig), cp);
}

static G2Point hash_pop(const Bytes& msg, const CurveParams& cp)
{
    return hash_to_g2(msg, to_bytes(cp.dst_pop), cp);
}

SecretKey keygen(const Bytes& seed, const CurveParams& cp)
{
    if (seed.empty()) {
        raise(Errc::empty_seed, "keygen needs a nonempty seed");
    }
    Int x = int_from_bytes_be(sha256(seed)) % cp.r;
    for (uint32_t counter = 0; x == 0; ++counter) {
        Bytes buf = seed;
        append_u32_be(buf, counter);
        x = int_from_bytes_be(sha256(buf)) % cp.r;
    }
    return SecretKey{&cp, x};
}

PublicKey sk_to_pk(const SecretKey& sk)
{
    return PublicKey{mul(sk.x, g1_generator(*sk.cp))};
}

Signature sign(const SecretKey& sk, const Bytes& msg)
{
    return Signature{mul(sk.x, hash_sig(msg, *sk.cp))};
}

static bool core_verify(const G1Point& pk, const G2Point& hashed,
                        const G2Point& sig)
{
    const CurveParams& cp = pk.params();
    return pairing(g1_generator(cp), sig) == pairing(pk, hashed);
}

bool verify(const PublicKey& pk, const Bytes& msg, const Signature& sig,
            Policy policy)
{
    const CurveParams& cp = pk.point.params();
    if (policy == Policy::hardened &&
        (pk.point.is_infinity() || sig.point.is_infinity())) {
        return false;
    }
    return core_verify(pk.point, hash_sig(msg, cp), sig.point);
}

bool key_validate(const Bytes& pk_bytes, Policy policy, const CurveParams& cp)
{
    if (policy == Policy::lenient) {
        if (is_infinity_bytes_naive(pk_bytes)) {
            return false;
        }
        try {
            decode_g1_lenient(pk_bytes, cp);
        } catch (const Error&) {
            return false;
        }
        return true;
    }
    try {
        return !decode_g1_strict(pk_bytes, cp).is_infinity();
    } catch (const Error&) {
        return false;
    }
}

Signature aggregate(const std::vector<Signature>& sigs)
{
    if (sigs.empty()) {
        raise(Errc::empty_input, "nothing to aggregate");
    }
    G2Point acc = sigs[0].point;
    for (std::size_t i = 1; i < sigs.size(); ++i) {
        acc = acc + sigs[i].point;
    }
    return Signature{acc};
}

static bool has_duplicate(const std::vector<Bytes>& msgs)
{
    std::set<Bytes> seen(msgs.begin(), msgs.end());
    return seen.size() != msgs.size();
}

bool aggregate_verify(const std::vector<PublicKey>& pks,
                      const std::vector<Bytes>& msgs, const Signature& sig,
                      Policy policy)
{
    if (pks.empty()) {
        raise(Errc::empty_input, "no public keys");
    }
    if (pks.size() != msgs.size()) {
        raise(Errc::length_mismatch, "key and message counts differ");
    }
    const CurveParams& cp = pks[0].point.params();
    if (policy == Policy::hardened) {
        if (sig.point.is_infinity() || has_duplicate(msgs)) {
            return false;
        }
        G1Point sum = G1Point::infinity(cp);
        for (const PublicKey& pk : pks) {
            if (pk.point.is_infinity()) {
                return false;
            }
            sum = sum + pk.point;
        }
        if (sum.is_infinity()) {
            return false;
        }
    }
    GtElement lhs = pairing(g1_generator(cp), sig.point);
    GtElement rhs = GtElement::one(cp);
    for (std::size_t i = 0; i < pks.size(); ++i) {
        rhs = rhs * pairing(pks[i].point, hash_sig(msgs[i], cp));
    }
    return lhs == rhs;
}

bool aggregate_verify_basic(const std::vector<PublicKey>& pks,
                            const std::vector<Bytes>& msgs,
                            const Signature& sig, Policy policy)
{
    if (has_duplicate(msgs)) {
        return false;
    }
    return aggregate_verify(pks, msgs, sig, policy);
}

Signature sign_aug(const SecretKey& sk, const Bytes& msg)
{
    Bytes augmented = encode(sk_to_pk(sk).point, true);
    append(augmented, msg);
    return sign(sk, augmented);
}

bool verify_aug(const PublicKey& pk, const Bytes& msg, const Signature& sig,
                Policy policy)
{
    Bytes augmented = encode(pk.point, true);
    append(augmented, msg);
    return verify(pk, augmented, sig, policy);
}

PopProof pop_prove(const SecretKey& sk)
{
    Bytes pk_bytes = encode(sk_to_pk(sk).point, true);
    return PopProof{mul(sk.x, hash_pop(pk_bytes, *sk.cp))};
}

bool pop_verify(const PublicKey& pk, const PopProof& proof, Policy policy)
{
    const CurveParams& cp = pk.point.params();
    if (policy == Policy::hardened &&
        (pk.point.is_infinity() || proof.point.is_infinity())) {
        return false;
    }
    Bytes pk_bytes = encode(pk.point, true);
    return pairing(pk.point, hash_pop(pk_bytes, cp)) ==
           pairing(g1_generator(cp), proof.point);
}

bool fast_aggregate_verify(const std::vector<PublicKey>& pks, const Bytes& msg,
                           const Signature& sig, Policy policy)
{
    if (pks.empty()) {
        raise(Errc::empty_input, "no public keys");
    }
    const CurveParams& cp = pks[0].point.params();
    G1Point apk = G1Point::infinity(cp);
    for (const PublicKey& pk : pks) {
        if (policy == Policy::hardened && pk.point.is_infinity()) {
            return false;
        }
        apk = apk + pk.point;
    }
    if (policy != Policy::lenient && apk.is_infinity()) {
        // KeyValidate on the aggregated key; the zero-sum collusion dies
        // here and only here.
        return false;
    }
    if (policy == Policy::hardened && sig.point.is_infinity()) {
        return false;
    }
    return core_verify(apk, hash_sig(msg, cp), sig.point);
}

}  // namespace toybls
