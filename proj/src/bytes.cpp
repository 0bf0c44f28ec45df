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

#include "toybls/bytes.hpp"

#include <openssl/evp.h>

#include "toybls/errors.hpp"

namespace toybls {

Bytes sha256(const uint8_t* data, std::size_t len)
{
    Bytes out(32);
    unsigned int written = 0;
    if (EVP_Digest(data, len, out.data(), &written, EVP_sha256(), nullptr) != 1 ||
        written != 32) {
        throw std::runtime_error("sha256: digest failed");
    }
    return out;
}

Bytes sha256(const Bytes& data)
{
    return sha256(data.data(), data.size());
}

std::string to_hex(const Bytes& data)
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0F]);
    }
    return out;
}

static int hex_nibble(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Bytes from_hex(const std::string& hex)
{
    if (hex.size() % 2 != 0) {
        raise(Errc::parse_error, "hex string has odd length");
    }
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_nibble(hex[i]);
        int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) {
            raise(Errc::parse_error, "non-hex character in input");
        }
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}

}  // namespace toybls
