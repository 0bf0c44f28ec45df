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

#include <stdexcept>
#include <string>

namespace toybls {

/// Machine-checkable failure causes. Verification entry points report
/// false instead of throwing; exceptions are reserved for contract
/// violations, malformed encodings and unusable parameters.
enum class Errc {
    // params
    search_exhausted,
    p_not_prime,
    p_not_3_mod_4,
    r_not_prime,
    r_equals_p,
    cofactor_mismatch,
    r_divides_h,
    generator_not_on_curve,
    generator_is_identity,
    generator_wrong_order,
    dst_not_distinct,
    fe_len_mismatch,
    // field / pairing
    division_by_zero,
    degenerate_pairing,
    hash_failure,
    // codec
    bad_length,
    non_canonical_infinity,
    bad_flags,
    coordinate_out_of_range,
    not_on_curve,
    not_in_subgroup,
    // bls / attacks / sim / cli
    empty_seed,
    empty_input,
    length_mismatch,
    too_many_keys,
    config_invalid,
    io_error,
    parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what)
{
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace toybls
