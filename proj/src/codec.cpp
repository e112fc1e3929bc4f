#include "sdpmds/codec.hpp"

#include <algorithm>
#include <sstream>

#include "sdpmds/error.hpp"
#include "sdpmds/hex.hpp"

namespace sdpmds {
namespace {

Cell cell_of_coordinate(std::size_t coord, unsigned n) {
    return Cell{static_cast<unsigned>(coord / n), static_cast<unsigned>(coord % n)};
}

void check_same_stripe(const CodeParams& a, const CodeParams& b) {
    if (a.r != b.r || a.n != b.n || !a.alg || !b.alg || !a.alg->same_as(*b.alg))
        throw Error("stripe array does not match the codec's parameters");
}

} // namespace

ErasurePattern::ErasurePattern(std::vector<Cell> cells) {
    for (Cell c : cells) insert(c);
}

void ErasurePattern::insert(Cell c) {
    if (!cells_.insert(c).second)
        throw Error("erasure pattern: duplicate cell " + std::to_string(c.row) + ":" +
                    std::to_string(c.col));
}

void ErasurePattern::check_in_range(unsigned r, unsigned n) const {
    for (Cell c : cells_)
        if (c.row >= r || c.col >= n)
            throw Error("erasure pattern: cell " + std::to_string(c.row) + ":" +
                        std::to_string(c.col) + " outside the " + std::to_string(r) +
                        "x" + std::to_string(n) + " stripe");
}

std::vector<std::size_t> ErasurePattern::coordinates(unsigned n) const {
    std::vector<std::size_t> out;
    out.reserve(cells_.size());
    for (Cell c : cells_) out.push_back(std::size_t{c.row} * n + c.col);
    return out; // set order is row-major already
}

std::string ErasurePattern::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (Cell c : cells_) {
        if (!first) os << ' ';
        os << c.row << ':' << c.col;
        first = false;
    }
    return os.str();
}

ErasurePattern ErasurePattern::parse(const std::string& text) {
    ErasurePattern p;
    std::istringstream is(text);
    std::string token;
    while (is >> token) {
        auto colon = token.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
            throw Error("erasure pattern: bad token '" + token + "', expected row:col");
        std::uint64_t row = parse_u64(token.substr(0, colon));
        std::uint64_t col = parse_u64(token.substr(colon + 1));
        if (row > 1u << 20 || col > 1u << 20)
            throw Error("erasure pattern: implausible cell '" + token + "'");
        p.insert(Cell{static_cast<unsigned>(row), static_cast<unsigned>(col)});
    }
    return p;
}

ErasurePattern ErasurePattern::full_columns(const std::vector<unsigned>& cols,
                                            unsigned r, unsigned n) {
    ErasurePattern p;
    for (unsigned col : cols) {
        if (col >= n)
            throw Error("erasure pattern: column " + std::to_string(col) +
                        " outside the stripe (n=" + std::to_string(n) + ")");
        for (unsigned row = 0; row < r; ++row) p.insert(Cell{row, col});
    }
    return p;
}

StripeArray StripeArray::zero(const CodeParams& params) {
    return StripeArray{params, std::vector<std::uint64_t>(params.stripe_len(), 0)};
}

std::uint64_t StripeArray::at(unsigned row, unsigned col) const {
    if (row >= params.r || col >= params.n) throw Error("StripeArray: cell out of range");
    return cells[std::size_t{row} * params.n + col];
}

void StripeArray::set(unsigned row, unsigned col, std::uint64_t v) {
    if (row >= params.r || col >= params.n) throw Error("StripeArray: cell out of range");
    params.alg->check_element(v);
    cells[std::size_t{row} * params.n + col] = v;
}

ErasurePattern parity_positions(const CodeParams& params) {
    validate(params);
    ErasurePattern p;
    for (unsigned row = 0; row < params.r; ++row)
        for (unsigned col = params.n - params.m; col < params.n; ++col)
            p.insert(Cell{row, col});
    p.insert(Cell{params.r - 1, params.n - params.m - 2});
    p.insert(Cell{params.r - 1, params.n - params.m - 1});
    return p;
}

bool pattern_decodable(const ParityCheckMatrix& pcm, const ErasurePattern& pattern) {
    if (pattern.empty()) return true;
    pattern.check_in_range(pcm.params.r, pcm.params.n);
    std::vector<std::size_t> coords = pattern.coordinates(pcm.params.n);
    Matrix sub = pcm.matrix.select_columns(coords);
    return sub.rank() == coords.size();
}

Codec::Codec(CodeParams params)
    : pcm_(build_parity_check(params)),
      parity_positions_(parity_positions(params)),
      parity_coords_(parity_positions_.coordinates(params.n)),
      parity_submatrix_(pcm_.matrix.select_columns(parity_coords_)) {
    if (!parity_submatrix_.is_invertible())
        throw Error("codec: parity submatrix unexpectedly singular for " +
                    params.describe() + " (construction bug)");
}

StripeArray Codec::encode(const std::vector<std::uint64_t>& data) const {
    if (data.size() != data_size())
        throw Error("encode: expected " + std::to_string(data_size()) +
                    " data symbols, got " + std::to_string(data.size()));
    const CodeParams& p = pcm_.params;
    StripeArray arr = StripeArray::zero(p);
    std::size_t next = 0;
    for (unsigned row = 0; row < p.r; ++row)
        for (unsigned col = 0; col < p.n; ++col)
            if (!parity_positions_.contains(Cell{row, col}))
                arr.set(row, col, data[next++]);

    // With parities zeroed, the syndrome is H times the data part; the
    // parity values are the unique solution cancelling it.
    std::vector<std::uint64_t> s = pcm_.matrix.mul_vector(arr.cells);
    Matrix::SolveResult sol = parity_submatrix_.solve(s);
    if (sol.status != Matrix::SolveResult::Status::kUnique)
        throw Error("encode: parity solve failed (construction bug)");
    for (std::size_t k = 0; k < parity_coords_.size(); ++k)
        arr.cells[parity_coords_[k]] = sol.solution[k];
    return arr;
}

std::vector<std::uint64_t> Codec::syndrome(const StripeArray& arr) const {
    check_same_stripe(arr.params, pcm_.params);
    return pcm_.matrix.mul_vector(arr.cells);
}

DecodeResult Codec::decode(const StripeArray& arr, const ErasurePattern& pattern) const {
    const CodeParams& p = pcm_.params;
    check_same_stripe(arr.params, p);
    pattern.check_in_range(p.r, p.n);

    if (pattern.size() > p.parity_count()) {
        Undecodable u;
        u.reason = "pattern has " + std::to_string(pattern.size()) +
                   " erasures, more than the mr+2 = " + std::to_string(p.parity_count()) +
                   " parity symbols";
        u.deficient.assign(pattern.begin(), pattern.end());
        return u;
    }

    StripeArray work = arr;
    for (Cell c : pattern) work.set(c.row, c.col, 0); // prior contents are gone

    std::vector<std::vector<unsigned>> row_erased(p.r);
    for (Cell c : pattern) row_erased[c.row].push_back(c.col);

    const Algebra& A = *p.alg;
    std::vector<Cell> remaining;
    for (unsigned row = 0; row < p.r; ++row) {
        const std::vector<unsigned>& cols = row_erased[row];
        if (cols.empty()) continue;
        if (cols.size() > p.m) {
            for (unsigned col : cols) remaining.push_back(Cell{row, col});
            continue;
        }
        // This row's own Vandermonde block pins its cells: m equations
        // in at most m unknowns, always full column rank.
        Matrix local(p.alg, p.m, cols.size());
        std::vector<std::uint64_t> rhs(p.m, 0);
        for (unsigned k = 0; k < p.m; ++k) {
            std::size_t hrow = std::size_t{row} * p.m + k;
            for (std::size_t u = 0; u < cols.size(); ++u)
                local.set(k, u, pcm_.matrix.at(hrow, std::size_t{row} * p.n + cols[u]));
            std::uint64_t acc = 0;
            for (unsigned i = 0; i < p.n; ++i)
                acc = A.add(acc, A.mul(pcm_.matrix.at(hrow, std::size_t{row} * p.n + i),
                                       work.at(row, i)));
            rhs[k] = acc;
        }
        Matrix::SolveResult sol = local.solve(rhs);
        if (sol.status == Matrix::SolveResult::Status::kInconsistent)
            throw Error("decode: row " + std::to_string(row) +
                        " is not consistent with any codeword");
        if (sol.status != Matrix::SolveResult::Status::kUnique) {
            for (unsigned col : cols) remaining.push_back(Cell{row, col});
            continue;
        }
        for (std::size_t u = 0; u < cols.size(); ++u)
            work.set(row, cols[u], sol.solution[u]);
    }

    if (!remaining.empty()) {
        std::sort(remaining.begin(), remaining.end());
        std::vector<std::size_t> coords;
        coords.reserve(remaining.size());
        for (Cell c : remaining) coords.push_back(std::size_t{c.row} * p.n + c.col);
        Matrix sub = pcm_.matrix.select_columns(coords);
        Matrix::SolveResult sol = sub.solve(pcm_.matrix.mul_vector(work.cells));
        if (sol.status == Matrix::SolveResult::Status::kInconsistent)
            throw Error("decode: unerased cells are not consistent with any codeword");
        if (sol.status == Matrix::SolveResult::Status::kUnderdetermined) {
            Undecodable u;
            u.reason = "erased coordinates are not uniquely solvable";
            for (std::size_t f : sol.free_columns)
                u.deficient.push_back(cell_of_coordinate(coords[f], p.n));
            return u;
        }
        for (std::size_t k = 0; k < coords.size(); ++k)
            work.cells[coords[k]] = sol.solution[k];
    }

    for (std::uint64_t v : pcm_.matrix.mul_vector(work.cells))
        if (v != 0)
            throw Error("decode: unerased cells are not consistent with any codeword");
    return work;
}

std::vector<std::uint64_t> random_data_symbols(const CodeParams& params,
                                               std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, params.alg->size() - 1);
    std::vector<std::uint64_t> data(params.data_count());
    for (std::uint64_t& v : data) v = dist(rng);
    return data;
}

} // namespace sdpmds
