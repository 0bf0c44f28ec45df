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

#include "toybls/bigint.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <random>

#include "toybls/errors.hpp"

namespace toybls {

std::size_t bit_length(const Int& n)
{
    if (n == 0) {
        return 0;
    }
    return static_cast<std::size_t>(boost::multiprecision::msb(n)) + 1;
}

bool bit_test(const Int& n, std::size_t i)
{
    return boost::multiprecision::bit_test(n, static_cast<unsigned>(i));
}

Int mod_pow(const Int& base, const Int& exp, const Int& m)
{
    Int b = base % m;
    if (b < 0) {
        b += m;
    }
    return boost::multiprecision::powm(b, exp, m);
}

Int mod_inverse(const Int& a, const Int& m)
{
    // Extended Euclid on (a mod m, m).
    Int r0 = a % m;
    if (r0 < 0) {
        r0 += m;
    }
    Int r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) {
        raise(Errc::division_by_zero, "no inverse modulo m");
    }
    Int inv = s0 % m;
    if (inv < 0) {
        inv += m;
    }
    return inv;
}

bool is_probable_prime(const Int& n)
{
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    // Fixed seed keeps the whole library deterministic for a given input.
    std::mt19937_64 gen(0x746f79626c73ULL);
    return boost::multiprecision::miller_rabin_test(n, 25, gen);
}

Int int_from_bytes_be(const uint8_t* data, std::size_t len)
{
    Int n = 0;
    for (std::size_t i = 0; i < len; ++i) {
        n <<= 8;
        n += data[i];
    }
    return n;
}

Int int_from_bytes_be(const Bytes& data)
{
    return int_from_bytes_be(data.data(), data.size());
}

Bytes int_to_bytes_be(const Int& n, std::size_t width)
{
    if (n < 0 || bit_length(n) > width * 8) {
        raise(Errc::length_mismatch, "integer does not fit requested width");
    }
    Bytes out(width, 0);
    Int v = n;
    for (std::size_t i = width; i-- > 0 && v != 0;) {
        out[i] = static_cast<uint8_t>(v & 0xFF);
        v >>= 8;
    }
    return out;
}

}  // namespace toybls
