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

#include "toybls/errors.hpp"

namespace toybls {

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::search_exhausted: return "search-exhausted";
    case Errc::p_not_prime: return "p-not-prime";
    case Errc::p_not_3_mod_4: return "p-not-3-mod-4";
    case Errc::r_not_prime: return "r-not-prime";
    case Errc::r_equals_p: return "r-equals-p";
    case Errc::cofactor_mismatch: return "cofactor-mismatch";
    case Errc::r_divides_h: return "r-divides-h";
    case Errc::generator_not_on_curve: return "generator-not-on-curve";
    case Errc::generator_is_identity: return "generator-is-identity";
    case Errc::generator_wrong_order: return "generator-wrong-order";
    case Errc::dst_not_distinct: return "dst-not-distinct";
    case Errc::fe_len_mismatch: return "fe-len-mismatch";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::degenerate_pairing: return "degenerate-pairing";
    case Errc::hash_failure: return "hash-failure";
    case Errc::bad_length: return "bad-length";
    case Errc::non_canonical_infinity: return "non-canonical-infinity";
    case Errc::bad_flags: return "bad-flags";
    case Errc::coordinate_out_of_range: return "coordinate-out-of-range";
    case Errc::not_on_curve: return "not-on-curve";
    case Errc::not_in_subgroup: return "not-in-subgroup";
    case Errc::empty_seed: return "empty-seed";
    case Errc::empty_input: return "empty-input";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::too_many_keys: return "too-many-keys";
    case Errc::config_invalid: return "config-invalid";
    case Errc::io_error: return "io-error";
    case Errc::parse_error: return "parse-error";
    }
    return "unknown";
}

}  // namespace toybls
