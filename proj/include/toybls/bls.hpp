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

#include <vector>

#include "toybls/codec.hpp"
#include "toybls/pairing.hpp"

namespace toybls {

/// How much input checking a verifier performs.
///
/// rfc      - the draft-standard pseudocode taken literally: the pairing
///            equation itself, plus KeyValidate on the aggregate key
///            inside fast_aggregate_verify; strict decoding.
/// hardened - rejects identity public keys and signatures everywhere,
///            rejects zero-sum key sets and duplicate messages in
///            aggregate verification; strict decoding.
/// lenient  - the pairing equation alone, with lenient decoding; models
///            the shortcuts audited libraries actually shipped.
enum class Policy {
    rfc,
    hardened,
    lenient,
};

const char* policy_name(Policy p);
Policy policy_from_name(const std::string& name);

/// Scalar in [0, r). Keeps a pointer to its curve; the params object
/// must outlive the key.
struct SecretKey {
    const CurveParams* cp;
    Int x;
};

struct PublicKey {
    G1Point point;
};

struct Signature {
    G2Point point;
};

/// Proof of possession: the secret scalar applied to a hash of the
/// serialized public key under the pop domain tag. Binds the key itself,
/// not any message.
struct PopProof {
    G2Point point;
};

/// SHA-256(seed) reduced mod r; re-hashes with a 4-byte counter in the
/// zero case. Throws empty-seed for an empty seed.
SecretKey keygen(const Bytes& seed, const CurveParams& cp);

PublicKey sk_to_pk(const SecretKey& sk);

Signature sign(const SecretKey& sk, const Bytes& msg);

/// e(generator, sig) == e(pk, hash(msg)). Hardened additionally rejects
/// an identity pk or sig up front; rfc leaves KeyValidate to the caller.
bool verify(const PublicKey& pk, const Bytes& msg, const Signature& sig,
            Policy policy);

/// Byte-level public key admission check.
/// rfc and hardened: strict decode and reject identity.
/// lenient: a naive byte comparison against canonical compressed
/// infinity followed by a lenient decode, so non-canonical infinity
/// encodings slip through.
bool key_validate(const Bytes& pk_bytes, Policy policy, const CurveParams& cp);

/// Point sum of the signatures. Throws empty-input on an empty list.
Signature aggregate(const std::vector<Signature>& sigs);

/// e(generator, sig) == product of e(pk_i, hash(msg_i)). Hardened
/// rejects identity keys or signature, a zero-sum key set and repeated
/// messages; rfc and lenient check the equation alone.
bool aggregate_verify(const std::vector<PublicKey>& pks,
                      const std::vector<Bytes>& msgs, const Signature& sig,
                      Policy policy);

/// Basic-scheme wrapper: false on any repeated message, under every
/// policy, then aggregate_verify.
bool aggregate_verify_basic(const std::vector<PublicKey>& pks,
                            const std::vector<Bytes>& msgs,
                            const Signature& sig, Policy policy);

/// Message-augmentation scheme: the serialized public key is prepended
/// to the message before hashing.
Signature sign_aug(const SecretKey& sk, const Bytes& msg);
bool verify_aug(const PublicKey& pk, const Bytes& msg, const Signature& sig,
                Policy policy);

PopProof pop_prove(const SecretKey& sk);

/// e(pk, pop_hash(serialized pk)) == e(generator, proof). Hardened
/// rejects an identity pk or proof first.
bool pop_verify(const PublicKey& pk, const PopProof& proof, Policy policy);

/// One pairing against the aggregated public key:
/// e(generator, sig) == e(sum pk_i, hash(msg)).
/// rfc runs KeyValidate on the aggregate, so a zero-sum key set fails;
/// hardened also rejects identity members and signature; lenient checks
/// the equation alone and accepts the zero-sum forgery.
bool fast_aggregate_verify(const std::vector<PublicKey>& pks, const Bytes& msg,
                           const Signature& sig, Policy policy);

}  // namespace toybls
