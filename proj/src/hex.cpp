#include "sdpmds/hex.hpp"

#include <cctype>

#include "sdpmds/error.hpp"

namespace sdpmds {

std::string to_hex(std::uint64_t bits) {
    static const char* digits = "0123456789abcdef";
    if (bits == 0) return "0";
    char buf[17];
    int pos = 16;
    while (bits != 0) {
        buf[--pos] = digits[bits & 0xf];
        bits >>= 4;
    }
    return std::string(buf + pos, buf + 16);
}

std::uint64_t parse_hex(const std::string& text) {
    if (text.empty() || text.size() > 16) {
        throw Error("bad hex token '" + text + "'");
    }
    std::uint64_t v = 0;
    for (char c : text) {
        const char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        int digit;
        if (lc >= '0' && lc <= '9') digit = lc - '0';
        else if (lc >= 'a' && lc <= 'f') digit = lc - 'a' + 10;
        else throw Error("bad hex token '" + text + "'");
        v = (v << 4) | static_cast<std::uint64_t>(digit);
    }
    return v;
}

std::uint64_t parse_u64(const std::string& text) {
    if (text.empty() || text.size() > 20) {
        throw Error("bad integer '" + text + "'");
    }
    std::uint64_t v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw Error("bad integer '" + text + "'");
        const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
        if (v > (UINT64_MAX - d) / 10) throw Error("integer overflow in '" + text + "'");
        v = v * 10 + d;
    }
    return v;
}

} // namespace sdpmds
