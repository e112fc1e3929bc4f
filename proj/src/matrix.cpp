#include "sdpmds/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sdpmds/error.hpp"
#include "sdpmds/hex.hpp"

namespace sdpmds {
namespace {

// Row-major working copy of one CRT component.
struct FieldMat {
    const Field* f;
    std::size_t rows, cols;
    std::vector<std::uint64_t> a;

    std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

FieldMat project_component(const Matrix& m, std::size_t comp) {
    const Algebra& alg = m.algebra();
    FieldMat out{&alg.component(comp), m.rows(), m.cols(), {}};
    out.a.resize(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.at(r, c) = alg.project(m.at(r, c), comp);
    return out;
}

// Reduce to reduced row echelon form on the first `reduce_cols` columns
// (remaining columns ride along, e.g. the augmented right-hand side).
// Returns the pivot columns in order.
std::vector<std::size_t> rref(FieldMat& m, std::size_t reduce_cols) {
    const Field& f = *m.f;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < reduce_cols && row < m.rows; ++col) {
        std::size_t pr = row;
        while (pr < m.rows && m.at(pr, col) == 0) ++pr;
        if (pr == m.rows) continue;
        if (pr != row)
            for (std::size_t c = 0; c < m.cols; ++c)
                std::swap(m.at(pr, c), m.at(row, c));
        std::uint64_t pinv = f.inv(m.at(row, col));
        for (std::size_t c = col; c < m.cols; ++c)
            m.at(row, c) = f.mul(m.at(row, c), pinv);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            std::uint64_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = f.add(m.at(r, c), f.mul(factor, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Determinant of one component by forward elimination; in characteristic
// 2 row swaps do not change the sign.
std::uint64_t field_determinant(FieldMat m) {
    const Field& f = *m.f;
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < m.cols; ++col) {
        std::size_t pr = col;
        while (pr < m.rows && m.at(pr, col) == 0) ++pr;
        if (pr == m.rows) return 0;
        if (pr != col)
            for (std::size_t c = 0; c < m.cols; ++c)
                std::swap(m.at(pr, c), m.at(col, c));
        std::uint64_t pivot = m.at(col, col);
        det = f.mul(det, pivot);
        std::uint64_t pinv = f.inv(pivot);
        for (std::size_t r = col + 1; r < m.rows; ++r) {
            std::uint64_t factor = f.mul(m.at(r, col), pinv);
            if (factor == 0) continue;
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = f.add(m.at(r, c), f.mul(factor, m.at(col, c)));
        }
    }
    return det;
}

} // namespace

Matrix::Matrix(std::shared_ptr<const Algebra> alg, std::size_t rows, std::size_t cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!alg_) throw Error("Matrix: null algebra");
}

std::uint64_t Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error("Matrix::at: index out of range");
    return data_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, std::uint64_t v) {
    if (r >= rows_ || c >= cols_) throw Error("Matrix::set: index out of range");
    alg_->check_element(v);
    data_[r * cols_ + c] = v;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
    Matrix out(alg_, rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw Error("Matrix::select_columns: column out of range");
        for (std::size_t r = 0; r < rows_; ++r)
            out.data_[r * cols.size() + j] = data_[r * cols_ + cols[j]];
    }
    return out;
}

std::vector<std::uint64_t> Matrix::mul_vector(const std::vector<std::uint64_t>& x) const {
    if (x.size() != cols_)
        throw Error("Matrix::mul_vector: vector length " + std::to_string(x.size()) +
                    " does not match " + std::to_string(cols_) + " columns");
    std::vector<std::uint64_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            acc = alg_->add(acc, alg_->mul(data_[r * cols_ + c], x[c]));
        out[r] = acc;
    }
    return out;
}

std::uint64_t Matrix::determinant() const {
    if (rows_ != cols_) throw Error("Matrix::determinant: matrix is not square");
    std::vector<std::uint64_t> dets(alg_->num_components());
    for (std::size_t k = 0; k < alg_->num_components(); ++k)
        dets[k] = field_determinant(project_component(*this, k));
    return alg_->lift(dets);
}

bool Matrix::is_invertible() const {
    if (rows_ != cols_) return false;
    return alg_->is_unit(determinant());
}

std::size_t Matrix::rank() const {
    std::size_t best = std::min(rows_, cols_);
    for (std::size_t k = 0; k < alg_->num_components(); ++k) {
        FieldMat m = project_component(*this, k);
        best = std::min(best, rref(m, cols_).size());
    }
    return best;
}

Matrix::SolveResult Matrix::solve(const std::vector<std::uint64_t>& b) const {
    if (b.size() != rows_)
        throw Error("Matrix::solve: rhs length " + std::to_string(b.size()) +
                    " does not match " + std::to_string(rows_) + " rows");
    for (std::uint64_t v : b) alg_->check_element(v);

    SolveResult result;
    std::set<std::size_t> free_cols;
    // One solution vector per component, lifted at the end.
    std::vector<std::vector<std::uint64_t>> comp_solutions(alg_->num_components());

    for (std::size_t k = 0; k < alg_->num_components(); ++k) {
        FieldMat m = project_component(*this, k);
        // Augment with the projected right-hand side.
        FieldMat aug{m.f, rows_, cols_ + 1, {}};
        aug.a.resize(rows_ * (cols_ + 1));
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = m.at(r, c);
            aug.at(r, cols_) = alg_->project(b[r], k);
        }
        std::vector<std::size_t> pivots = rref(aug, cols_);

        // A zero row with nonzero rhs means no solution in this component.
        for (std::size_t r = pivots.size(); r < rows_; ++r)
            if (aug.at(r, cols_) != 0) result.status = SolveResult::Status::kInconsistent;

        if (pivots.size() < cols_) {
            if (result.status != SolveResult::Status::kInconsistent)
                result.status = SolveResult::Status::kUnderdetermined;
            std::size_t pi = 0;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (pi < pivots.size() && pivots[pi] == c) ++pi;
                else free_cols.insert(c);
            }
            continue;
        }
        comp_solutions[k].resize(cols_);
        for (std::size_t r = 0; r < cols_; ++r)
            comp_solutions[k][pivots[r]] = aug.at(r, cols_);
    }

    result.free_columns.assign(free_cols.begin(), free_cols.end());
    if (result.status != SolveResult::Status::kUnique) return result;

    result.solution.resize(cols_);
    std::vector<std::uint64_t> residues(alg_->num_components());
    for (std::size_t c = 0; c < cols_; ++c) {
        for (std::size_t k = 0; k < alg_->num_components(); ++k)
            residues[k] = comp_solutions[k][c];
        result.solution[c] = alg_->lift(residues);
    }
    return result;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << to_hex(data_[r * cols_ + c]);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace sdpmds
