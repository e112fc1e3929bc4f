#include "sdpmds/io.hpp"

#include <fstream>
#include <sstream>

#include "sdpmds/error.hpp"
#include "sdpmds/hex.hpp"

namespace sdpmds {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
    if (!out) throw Error("write failed: " + path);
}

std::vector<std::uint64_t> read_data_file(const std::string& path,
                                          const CodeParams& params) {
    std::istringstream is(read_text_file(path));
    std::vector<std::uint64_t> data;
    std::string token;
    while (is >> token) data.push_back(params.alg->element_from_hex(token));
    if (data.size() != params.data_count())
        throw Error("data file " + path + ": expected " +
                    std::to_string(params.data_count()) + " symbols, found " +
                    std::to_string(data.size()));
    return data;
}

StripeArray read_array_file(const std::string& path, const CodeParams& params) {
    std::istringstream is(read_text_file(path));
    StripeArray arr = StripeArray::zero(params);
    std::string line;
    unsigned row = 0;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string token;
        unsigned col = 0;
        while (ls >> token) {
            if (row >= params.r || col >= params.n)
                throw Error("array file " + path + ": more than " +
                            std::to_string(params.r) + "x" + std::to_string(params.n) +
                            " entries");
            arr.set(row, col, params.alg->element_from_hex(token));
            ++col;
        }
        if (col == 0) continue; // tolerate blank lines
        if (col != params.n)
            throw Error("array file " + path + ": row " + std::to_string(row) + " has " +
                        std::to_string(col) + " entries, expected " +
                        std::to_string(params.n));
        ++row;
    }
    if (row != params.r)
        throw Error("array file " + path + ": found " + std::to_string(row) +
                    " rows, expected " + std::to_string(params.r));
    return arr;
}

std::string array_to_text(const StripeArray& arr) {
    std::ostringstream os;
    for (unsigned row = 0; row < arr.params.r; ++row) {
        for (unsigned col = 0; col < arr.params.n; ++col) {
            if (col) os << ' ';
            os << to_hex(arr.at(row, col));
        }
        os << '\n';
    }
    return os.str();
}

void write_array_file(const std::string& path, const StripeArray& arr) {
    write_text_file(path, array_to_text(arr));
}

ErasurePattern read_pattern_file(const std::string& path, const CodeParams& params) {
    ErasurePattern p = ErasurePattern::parse(read_text_file(path));
    p.check_in_range(params.r, params.n);
    return p;
}

} // namespace sdpmds
