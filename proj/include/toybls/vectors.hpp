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

#include <iosfwd>
#include <optional>

#include "toybls/attacks.hpp"

namespace toybls {

/// One verification case in the line format
///   scheme=<s> op=<o> policy=<p> pk=<hex,...> msg=<hex,...> sig=<hex> expect=<bool>
/// Lists are comma-separated, empty lists stay empty, '#' starts a
/// comment line.
struct VectorRecord {
    std::string scheme;   // basic | aug | pop
    std::string op;       // verify | aggregate_verify | fast_aggregate_verify
                          // | pop_verify | key_validate
    Policy policy = Policy::rfc;
    std::vector<std::string> pk;
    std::vector<std::string> msg;
    std::string sig;
    bool expect = false;
};

std::string record_to_line(const VectorRecord& rec);

/// Throws parse-error on malformed lines.
VectorRecord record_from_line(const std::string& line);

/// Executes the record against the library and returns the verdict.
bool run_record(const VectorRecord& rec, const CurveParams& cp);

/// Writes the full deterministic corpus: honest cases for the three
/// schemes, encoding-alias cases and the attack catalog. Returns the
/// record count.
std::size_t emit_vectors(std::ostream& out, const CurveParams& cp,
                         const Bytes& seed);

struct CheckFailure {
    std::size_t line_no = 0;
    std::string line;
    bool expected = false;
    bool actual = false;
};

struct CheckResult {
    std::size_t total = 0;
    std::vector<CheckFailure> failures;
};

/// Replays a vector file. With a policy override every record runs
/// under that policy instead of its own, a quick way to see which
/// verdicts are policy-dependent.
CheckResult check_vectors(std::istream& in, const CurveParams& cp,
                          std::optional<Policy> policy_override);

}  // namespace toybls
