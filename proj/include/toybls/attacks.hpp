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

#include <utility>

#include "toybls/bls.hpp"

namespace toybls {

/// Colluding key set whose public keys sum to the identity: the first
/// n - 1 scalars are derived from the seed, the last is chosen so the
/// scalars sum to 0 mod r. Every member still holds its own secret and
/// can produce a valid proof of possession.
struct SplitZeroSet {
    std::vector<SecretKey> sks;
    std::vector<PublicKey> pks;
    std::vector<PopProof> pops;
};

/// Requires n >= 2. Deterministic in (n, seed).
SplitZeroSet make_split_zero_set(std::size_t n, const Bytes& seed,
                                 const CurveParams& cp);

/// One verifier call an attack witness pins down: the entry point, the
/// policy, hex-encoded inputs and the verdict the library must produce.
struct WitnessCheck {
    std::string entry;   // verify | aggregate_verify | fast_aggregate_verify
                         // | pop_verify | key_validate
    Policy policy;
    std::vector<std::string> pks;    // compressed G1, hex
    std::vector<std::string> msgs;   // hex
    std::string sig;                 // compressed G2, hex; empty for key_validate
    bool expect;
};

/// Self-contained, replayable record of one attack: enough material to
/// re-run every check from the serialized inputs alone.
struct AttackWitness {
    std::string name;
    std::string description;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<WitnessCheck> checks;
};

/// Executes one check byte-for-byte: inputs are decoded with the
/// decoder the policy implies (strict for rfc and hardened, lenient
/// otherwise) and a decode failure counts as a false verdict.
bool run_check(const WitnessCheck& check, const CurveParams& cp);

/// True when every check in the witness reproduces its pinned verdict.
bool replay(const AttackWitness& w, const CurveParams& cp);

/// A colluding pair plus an honest signer: the honest signature on its
/// own message verifies as an aggregate in which the colluders appear
/// to have signed an arbitrary message they never touched. The same
/// witness retargets the claimed message to show nothing binds it.
AttackWitness forge_aggregate_witness(const Bytes& seed, const Bytes& honest_msg,
                                      const Bytes& forged_msg,
                                      const CurveParams& cp);

/// The identity signature against a colluding pair: one aggregate entry
/// point rejects while the other accepts the very same key material, so
/// two standard-conforming verifiers disagree.
AttackWitness consensus_divergence_witness(const Bytes& seed, const Bytes& msg,
                                           const CurveParams& cp);

/// Classic rogue-key subtraction: the attacker publishes x2*G - X1 and
/// forges the two-party aggregate alone. Succeeds under every policy;
/// what stops it is the proof-of-possession registration step, which
/// the attacker cannot satisfy.
AttackWitness rogue_public_key_witness(const Bytes& victim_seed, const Bytes& msg,
                                       const CurveParams& cp);

/// Non-canonical infinity encodings that a naive byte comparison
/// misses but a lenient decoder still maps to the identity.
AttackWitness encoding_bypass_witness(const CurveParams& cp);

/// With a zero-sum pair inserted next to an honest signer, the fast
/// aggregate check degenerates to the honest signer's own equation:
/// the pair neither helps nor hinders, for any message. The signature
/// still binds the message, so this is key-unbinding, not forgery.
AttackWitness key_binding_witness(const Bytes& seed, const Bytes& msg,
                                  const CurveParams& cp);

/// All five witnesses with sub-seeds and messages derived from seed.
std::vector<AttackWitness> all_witnesses(const Bytes& seed,
                                         const CurveParams& cp);

/// First bytes u for which [u, 0, ...] at compressed-G1 length decodes
/// leniently to infinity.
std::vector<uint8_t> scan_infinity_aliases(const CurveParams& cp);

/// Indices (ascending, lexicographically ordered) of every nonempty
/// subset of at most max_subset keys whose points sum to the identity.
/// Throws too-many-keys above 24 inputs.
std::vector<std::vector<std::size_t>> scan_zero_sum_subsets(
    const std::vector<PublicKey>& pks, std::size_t max_subset);

}  // namespace toybls
