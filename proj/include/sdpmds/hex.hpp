#pragma once

#include <cstdint>
#include <string>

namespace sdpmds {

// Serialization convention: a binary polynomial or element is the lowercase
// hex of its bit pattern, bit i = coefficient of x^i (x^4+x+1 -> "13").
std::string to_hex(std::uint64_t bits);
std::uint64_t parse_hex(const std::string& text);

// Strict decimal parse; rejects empty strings and trailing junk.
std::uint64_t parse_u64(const std::string& text);

} // namespace sdpmds
