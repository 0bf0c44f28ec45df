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

#include <boost/multiprecision/cpp_int.hpp>

#include "toybls/bytes.hpp"

namespace toybls {

using Int = boost::multiprecision::cpp_int;

/// Number of significant bits; 0 for n == 0.
std::size_t bit_length(const Int& n);

bool bit_test(const Int& n, std::size_t i);

/// base^exp mod m for m > 0, exp >= 0.
Int mod_pow(const Int& base, const Int& exp, const Int& m);

/// Multiplicative inverse of a mod m. Throws division-by-zero when
/// gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

/// Deterministic Miller-Rabin with 25 fixed-seed rounds.
bool is_probable_prime(const Int& n);

Int int_from_bytes_be(const uint8_t* data, std::size_t len);
Int int_from_bytes_be(const Bytes& data);

/// Big-endian, zero-padded to width bytes. Throws length-mismatch if n
/// does not fit.
Bytes int_to_bytes_be(const Int& n, std::size_t width);

}  // namespace toybls
