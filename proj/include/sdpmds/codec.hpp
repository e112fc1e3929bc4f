#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sdpmds/code.hpp"

namespace sdpmds {

struct Cell {
    unsigned row = 0;
    unsigned col = 0;
    auto operator<=>(const Cell&) const = default;
};

// A set of erased (row, col) cells, kept sorted row-major so that first
// counterexamples and coordinate lists are deterministic.
class ErasurePattern {
public:
    ErasurePattern() = default;
    explicit ErasurePattern(std::vector<Cell> cells);

    void insert(Cell c); // duplicates rejected
    bool contains(Cell c) const { return cells_.count(c) != 0; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

    void check_in_range(unsigned r, unsigned n) const;
    // Row-major codeword coordinates row*n + col, ascending.
    std::vector<std::size_t> coordinates(unsigned n) const;

    // One-line file form: space-separated row:col pairs, sorted.
    std::string to_string() const;
    static ErasurePattern parse(const std::string& text);
    static ErasurePattern full_columns(const std::vector<unsigned>& cols,
                                       unsigned r, unsigned n);

    bool operator==(const ErasurePattern& o) const { return cells_ == o.cells_; }

private:
    std::set<Cell> cells_;
};

// One r x n stripe of algebra elements, row-major; cell (row, col) is
// codeword coordinate row*n + col.
struct StripeArray {
    CodeParams params;
    std::vector<std::uint64_t> cells; // r*n entries

    static StripeArray zero(const CodeParams& params);
    std::uint64_t at(unsigned row, unsigned col) const;
    void set(unsigned row, unsigned col, std::uint64_t v);

    bool operator==(const StripeArray& o) const { return cells == o.cells; }
};

// Decode failure as a value: the coordinates that could not be pinned
// down (or the whole pattern when it was oversized).
struct Undecodable {
    std::string reason;
    std::vector<Cell> deficient;
};

using DecodeResult = std::variant<StripeArray, Undecodable>;

// The mr+2 coordinates this artifact reserves for parity: the last m
// columns of every row plus cells (r-1, n-m-2) and (r-1, n-m-1). The
// layout is exactly one of the decodable patterns (m full columns plus
// two extra sectors in one row), so the parity submatrix is invertible
// by construction; the constructor checks that and fails loudly
// otherwise.
ErasurePattern parity_positions(const CodeParams& params);

// Rank verdict: does the parity-check submatrix on the erased
// coordinates admit a unique solution (full column rank in every CRT
// component)?
bool pattern_decodable(const ParityCheckMatrix& pcm, const ErasurePattern& pattern);

// Systematic encoder / erasure decoder against one parity-check matrix.
class Codec {
public:
    explicit Codec(CodeParams params);

    const CodeParams& params() const { return pcm_.params; }
    const ParityCheckMatrix& parity_check() const { return pcm_; }
    std::size_t data_size() const { return pcm_.params.data_count(); }
    const ErasurePattern& parities() const { return parity_positions_; }

    // Places data row-major into the non-parity cells and solves the
    // parity cells so every syndrome vanishes.
    StripeArray encode(const std::vector<std::uint64_t>& data) const;

    // H times the row-major cell vector.
    std::vector<std::uint64_t> syndrome(const StripeArray& arr) const;

    // Repairs the erased cells (their prior contents are ignored).
    // Rows holding at most m erasures are repaired from their own
    // Vandermonde block first; whatever remains is solved jointly
    // against the full matrix. Patterns larger than mr+2 are rejected
    // before solving. Throws Error if the unerased cells are not
    // consistent with any codeword.
    DecodeResult decode(const StripeArray& arr, const ErasurePattern& pattern) const;

private:
    ParityCheckMatrix pcm_;
    ErasurePattern parity_positions_;
    std::vector<std::size_t> parity_coords_;
    Matrix parity_submatrix_;
};

// data_count() seeded-uniform elements for round-trip tests and bench.
std::vector<std::uint64_t> random_data_symbols(const CodeParams& params,
                                               std::mt19937_64& rng);

} // namespace sdpmds
