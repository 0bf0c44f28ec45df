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

#include "toybls/sim.hpp"

#include <set>
#include <sstream>

#include "toybls/errors.hpp"

namespace toybls {

std::string SimReport::to_text() const
{
    std::ostringstream os;
    for (const NodeOutcome& n : nodes) {
        os << "node=" << n.node << " block=" << n.accepted_hex
           << " verdict=" << (n.verdict ? "true" : "false") << "\n";
    }
    os << "divergence=" << divergence << " agg_sig=" << aggregate_signature_hex
       << "\n";
    return os.str();
}

static void check_config(const SimConfig& cfg)
{
    if (cfg.n_honest_nodes < 2 || cfg.colluder_count < 2) {
        raise(Errc::config_invalid,
              "need at least two honest nodes and two colluders");
    }
    if (cfg.honest_block.empty()) {
        raise(Errc::config_invalid, "honest block must be nonempty");
    }
    if (cfg.forged_blocks.empty()) {
        return;
    }
    if (cfg.forged_blocks.size() != cfg.n_honest_nodes) {
        raise(Errc::config_invalid, "need one forged block per honest node");
    }
    std::set<Bytes> distinct(cfg.forged_blocks.begin(), cfg.forged_blocks.end());
    if (distinct.size() != cfg.forged_blocks.size() ||
        distinct.count(cfg.honest_block)) {
        raise(Errc::config_invalid,
              "forged blocks must be pairwise distinct and differ from the "
              "honest block");
    }
}

SimReport run_split_view(const SimConfig& cfg, const CurveParams& cp)
{
    check_config(cfg);

    // The committee: a zero-sum colluding set plus one honest proposer.
    SplitZeroSet colluders = make_split_zero_set(cfg.colluder_count, cfg.seed, cp);
    Bytes proposer_seed = cfg.seed;
    append(proposer_seed, to_bytes("/honest-proposer"));
    SecretKey proposer = keygen(proposer_seed, cp);

    std::vector<PublicKey> committee = colluders.pks;
    committee.push_back(sk_to_pk(proposer));

    // Everyone signs the honest block; one submission per proposer, so
    // no equivocating pair ever lands on the aggregator's desk.
    std::vector<Signature> sigs;
    for (const SecretKey& sk : colluders.sks) {
        sigs.push_back(sign(sk, cfg.honest_block));
    }
    sigs.push_back(sign(proposer, cfg.honest_block));
    Signature agg = aggregate(sigs);

    SimReport report;
    report.aggregate_signature_hex = to_hex(encode(agg.point, true));
    report.aggregator_accepted.assign(committee.size(), true);
    report.slashing_evidence_found = false;

    std::string honest_hex = to_hex(cfg.honest_block);
    std::set<std::string> accepted;
    for (std::size_t i = 0; i < cfg.n_honest_nodes; ++i) {
        bool verdict;
        if (cfg.forged_blocks.empty()) {
            // Honest run: one co-signed block, checked on the fast path.
            verdict = fast_aggregate_verify(committee, cfg.honest_block, agg,
                                            cfg.policy);
        } else {
            // Node i is shown the committee's claimed message list: the
            // colluders claim the forged block, the honest proposer's
            // slot keeps the honest block its signature really covers.
            std::vector<Bytes> claimed(cfg.colluder_count, cfg.forged_blocks[i]);
            claimed.push_back(cfg.honest_block);
            verdict = aggregate_verify(committee, claimed, agg, cfg.policy);
        }

        NodeOutcome outcome;
        outcome.node = i;
        outcome.verdict = verdict;
        // A node that rejects the claimed list falls back to the honest
        // block it can verify independently.
        outcome.accepted_hex = (verdict && !cfg.forged_blocks.empty())
                                   ? to_hex(cfg.forged_blocks[i])
                                   : honest_hex;
        accepted.insert(outcome.accepted_hex);
        report.nodes.push_back(outcome);
    }
    report.divergence = accepted.size();
    return report;
}

}  // namespace toybls
