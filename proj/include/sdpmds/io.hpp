#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdpmds/codec.hpp"

namespace sdpmds {

// Data file: data_count() whitespace-separated hex tokens.
std::vector<std::uint64_t> read_data_file(const std::string& path,
                                          const CodeParams& params);

// Array file: exactly r lines of n whitespace-separated hex tokens.
StripeArray read_array_file(const std::string& path, const CodeParams& params);
std::string array_to_text(const StripeArray& arr);
void write_array_file(const std::string& path, const StripeArray& arr);

// Pattern file: space-separated row:col pairs on one line (an empty file
// is the empty pattern).
ErasurePattern read_pattern_file(const std::string& path, const CodeParams& params);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace sdpmds
