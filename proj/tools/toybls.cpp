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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toybls/bls.hpp"
#include "toybls/errors.hpp"
#include "toybls/params.hpp"
#include "toybls/sim.hpp"
#include "toybls/vectors.hpp"

using namespace toybls;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

const CurveParams& resolve_params(const std::string& sel, CurveParams& storage)
{
    if (sel == "default") {
        return default_params();
    }
    if (sel == "tiny") {
        return tiny_params();
    }
    std::ifstream in(sel);
    if (!in) {
        raise(Errc::io_error, "cannot open params file: " + sel);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    storage = params_from_text(buf.str());
    return storage;
}

Policy parse_policy(const std::string& name)
{
    return policy_from_name(name);
}

int cmd_demo(const std::string& name, const std::string& seed,
             const CurveParams& cp)
{
    AttackWitness w;
    Bytes s = to_bytes(seed);
    if (name == "splitting-zero") {
        w = forge_aggregate_witness(s, to_bytes("message the honest party signed"),
                                    to_bytes("message nobody signed"), cp);
    } else if (name == "consensus-divergence") {
        w = consensus_divergence_witness(s, to_bytes("disputed payload"), cp);
    } else if (name == "encoding-bypass") {
        w = encoding_bypass_witness(cp);
    } else if (name == "rogue-key") {
        w = rogue_public_key_witness(s, to_bytes("two-party statement"), cp);
    } else {
        w = key_binding_witness(s, to_bytes("attested payload"), cp);
    }

    std::cout << "demo: " << w.name << "\n" << w.description << "\n\ninputs:\n";
    for (const auto& [label, value] : w.inputs) {
        std::cout << "  " << label << " = " << value << "\n";
    }
    std::cout << "\nchecks:\n";
    bool ok = true;
    for (const WitnessCheck& chk : w.checks) {
        bool actual = run_check(chk, cp);
        ok = ok && actual == chk.expect;
        std::cout << "  entry=" << chk.entry << " policy=" << policy_name(chk.policy)
                  << " expect=" << (chk.expect ? "true" : "false")
                  << " actual=" << (actual ? "true" : "false")
                  << (actual == chk.expect ? "" : "  <-- MISMATCH") << "\n";
    }
    std::cout << "\nreplayed=" << (ok ? "true" : "false") << "\n";
    return ok ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Desk-scale BLS signature laboratory"};
    app.require_subcommand(1);

    std::string params_sel = "default";
    app.add_option("--params", params_sel,
                   "curve parameters: default, tiny, or a params file")
        ->capture_default_str();

    auto* gen = app.add_subcommand("gen-params", "search for curve parameters");
    unsigned gen_bits = 60;
    uint64_t gen_seed = 1;
    gen->add_option("--bits", gen_bits, "subgroup order size in bits")->required();
    gen->add_option("--seed", gen_seed, "search seed")->capture_default_str();

    auto* kg = app.add_subcommand("keygen", "derive a key pair from a seed");
    std::string kg_seed;
    kg->add_option("--seed", kg_seed, "seed bytes, taken as ASCII")->required();

    auto* sg = app.add_subcommand("sign", "sign a message");
    std::string sg_sk, sg_msg;
    sg->add_option("--sk", sg_sk, "secret scalar, hex")->required();
    sg->add_option("--msg", sg_msg, "message, hex")->required();

    auto* vf = app.add_subcommand("verify", "verify a signature");
    std::string vf_pk, vf_msg, vf_sig, vf_policy = "rfc";
    vf->add_option("--pk", vf_pk, "public key, compressed hex")->required();
    vf->add_option("--msg", vf_msg, "message, hex")->required();
    vf->add_option("--sig", vf_sig, "signature, compressed hex")->required();
    vf->add_option("--policy", vf_policy, "rfc, hardened or lenient")
        ->check(CLI::IsMember({"rfc", "hardened", "lenient"}))
        ->capture_default_str();

    auto* ag = app.add_subcommand("aggregate", "sum signatures");
    std::string ag_sigs;
    ag->add_option("--sigs", ag_sigs, "comma-separated signature hex")->required();

    auto* dm = app.add_subcommand("demo", "replay an attack witness");
    std::string dm_name, dm_seed = "demo";
    dm->add_option("name", dm_name, "which demo")
        ->check(CLI::IsMember({"splitting-zero", "consensus-divergence",
                               "encoding-bypass", "rogue-key", "key-binding"}))
        ->required();
    dm->add_option("--seed", dm_seed, "witness seed")->capture_default_str();

    auto* sim = app.add_subcommand("sim", "protocol simulations");
    sim->require_subcommand(1);
    auto* sv = sim->add_subcommand("split-view", "zero-sum committee split view");
    std::size_t sv_nodes = 3, sv_colluders = 2;
    std::string sv_policy = "rfc", sv_seed = "sim";
    sv->add_option("--nodes", sv_nodes, "honest node count")->capture_default_str();
    sv->add_option("--colluders", sv_colluders, "colluding key count")
        ->capture_default_str();
    sv->add_option("--policy", sv_policy, "verification policy")
        ->check(CLI::IsMember({"rfc", "hardened", "lenient"}))
        ->capture_default_str();
    sv->add_option("--seed", sv_seed, "scenario seed")->capture_default_str();

    auto* vec = app.add_subcommand("vectors", "test vector files");
    vec->require_subcommand(1);
    auto* ve = vec->add_subcommand("emit", "write the vector corpus");
    std::string ve_out;
    ve->add_option("--out", ve_out, "output file, - for stdout")->required();
    auto* vc = vec->add_subcommand("check", "replay a vector file");
    std::string vc_in, vc_override;
    vc->add_option("--in", vc_in, "input file, - for stdin")->required();
    vc->add_option("--policy-override", vc_override,
                   "run every record under this policy")
        ->check(CLI::IsMember({"rfc", "hardened", "lenient"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        CurveParams file_params;

        if (gen->parsed()) {
            std::cout << params_to_text(generate_params(gen_bits, gen_seed));
            return kOk;
        }
        if (kg->parsed()) {
            const CurveParams& cp = resolve_params(params_sel, file_params);
            SecretKey sk = keygen(to_bytes(kg_seed), cp);
            std::cout << "sk=" << to_hex(int_to_bytes_be(sk.x, cp.fe_len)) << "\n"
                      << "pk=" << to_hex(encode(sk_to_pk(sk).point, true)) << "\n";
            return kOk;
        }
        if (sg->parsed()) {
            const CurveParams& cp = resolve_params(params_sel, file_params);
            SecretKey sk{&cp, int_from_bytes_be(from_hex(sg_sk)) % cp.r};
            Signature sig = sign(sk, from_hex(sg_msg));
            std::cout << "sig=" << to_hex(encode(sig.point, true)) << "\n";
            return kOk;
        }
        if (vf->parsed()) {
            const CurveParams& cp = resolve_params(params_sel, file_params);
            WitnessCheck chk{"verify", parse_policy(vf_policy),
                             {vf_pk},  {vf_msg},
                             vf_sig,   true};
            bool verdict = run_check(chk, cp);
            std::cout << "verdict=" << (verdict ? "true" : "false") << "\n";
            return verdict ? kOk : kRejected;
        }
        if (ag->parsed()) {
            const CurveParams& cp = resolve_params(params_sel, file_params);
            std::vector<Signature> sigs;
            std::stringstream ss(ag_sigs);
            std::string part;
            while (std::getline(ss, part, ',')) {
                sigs.push_back(Signature{decode_g2_strict(from_hex(part), cp)});
            }
            std::cout << "agg=" << to_hex(encode(aggregate(sigs).point, true))
                      << "\n";
            return kOk;
        }
        if (dm->parsed()) {
            const CurveParams& cp = resolve_params(params_sel, file_params);
            return cmd_demo(dm_name, dm_seed, cp);
        }
        if (sv->parsed()) {
            const CurveParams& cp = resolve_params(params_sel, file_params);
            SimConfig cfg;
            cfg.n_honest_nodes = sv_nodes;
            cfg.colluder_count = sv_colluders;
            cfg.honest_block = to_bytes("the honest block");
            for (std::size_t i = 0; i < sv_nodes; ++i) {
                cfg.forged_blocks.push_back(
                    to_bytes("block proposal " + std::to_string(i)));
            }
            cfg.policy = parse_policy(sv_policy);
            cfg.seed = to_bytes(sv_seed);
            std::cout << run_split_view(cfg, cp).to_text();
            return kOk;
        }
        if (ve->parsed()) {
            const CurveParams& cp = resolve_params(params_sel, file_params);
            std::size_t count = 0;
            if (ve_out == "-") {
                count = emit_vectors(std::cout, cp, to_bytes("vectors"));
            } else {
                std::ofstream out(ve_out);
                if (!out) {
                    raise(Errc::io_error, "cannot open output file: " + ve_out);
                }
                count = emit_vectors(out, cp, to_bytes("vectors"));
            }
            std::cerr << "wrote " << count << " records\n";
            return kOk;
        }
        if (vc->parsed()) {
            const CurveParams& cp = resolve_params(params_sel, file_params);
            std::optional<Policy> override_policy;
            if (!vc_override.empty()) {
                override_policy = parse_policy(vc_override);
            }
            CheckResult result;
            if (vc_in == "-") {
                result = check_vectors(std::cin, cp, override_policy);
            } else {
                std::ifstream in(vc_in);
                if (!in) {
                    raise(Errc::io_error, "cannot open input file: " + vc_in);
                }
                result = check_vectors(in, cp, override_policy);
            }
            for (const CheckFailure& f : result.failures) {
                std::cout << "line " << f.line_no << ": expected "
                          << (f.expected ? "true" : "false") << ", got "
                          << (f.actual ? "true" : "false") << ": " << f.line
                          << "\n";
            }
            std::cout << "checked " << result.total << " records, "
                      << result.failures.size() << " failed\n";
            return result.failures.empty() ? kOk : kRejected;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
