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

#include <cstdint>
#include <string>
#include <vector>

namespace toybls {

using Bytes = std::vector<uint8_t>;

Bytes sha256(const uint8_t* data, std::size_t len);
Bytes sha256(const Bytes& data);

/// Lowercase hex, two digits per byte.
std::string to_hex(const Bytes& data);

/// Inverse of to_hex; accepts upper and lower case. Throws parse-error
/// on odd length or non-hex characters.
Bytes from_hex(const std::string& hex);

inline Bytes to_bytes(const std::string& s)
{
    return Bytes(s.begin(), s.end());
}

inline void append(Bytes& out, const Bytes& more)
{
    out.insert(out.end(), more.begin(), more.end());
}

inline void append_u32_be(Bytes& out, uint32_t v)
{
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

}  // namespace toybls
