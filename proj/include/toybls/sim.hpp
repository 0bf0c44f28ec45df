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

#include "toybls/attacks.hpp"

namespace toybls {

/// Split-view scenario: a colluding committee with a zero-sum key set
/// co-signs one honest proposal, then shows each honest node a different
/// claimed block list against the same aggregate signature.
struct SimConfig {
    std::size_t n_honest_nodes = 0;   // >= 2
    std::size_t colluder_count = 0;   // >= 2
    Bytes honest_block;
    /// One claimed block per honest node; empty disables the attack and
    /// every node sees honest_block. When present the entries must be
    /// pairwise distinct and differ from honest_block.
    std::vector<Bytes> forged_blocks;
    Policy policy = Policy::rfc;
    Bytes seed;
};

struct NodeOutcome {
    std::size_t node = 0;
    bool verdict = false;        // aggregate_verify on the claimed list
    std::string accepted_hex;    // block the node ends up accepting
};

struct SimReport {
    std::string aggregate_signature_hex;
    std::vector<NodeOutcome> nodes;
    /// Signature admission per proposer, in committee order followed by
    /// the honest proposer.
    std::vector<bool> aggregator_accepted;
    std::size_t divergence = 0;   // distinct accepted blocks across nodes
    bool slashing_evidence_found = false;

    /// One line per node, then a summary line.
    std::string to_text() const;
};

/// Deterministic in the config. Throws config-invalid on out-of-range
/// counts or malformed forged_blocks.
SimReport run_split_view(const SimConfig& cfg, const CurveParams& cp);

}  // namespace toybls
