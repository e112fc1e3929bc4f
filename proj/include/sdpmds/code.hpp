#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdpmds/algebra.hpp"
#include "sdpmds/matrix.hpp"

namespace sdpmds {

// Which global-parity layout the stripe uses. Both variants share the
// same per-row column parities; they differ only in the stride of the
// second global row (n for SD, N = (m+1)(n-m-1)+1 for PMDS).
enum class Variant { kSD, kPMDS };

std::string variant_name(Variant v);

// Parameters of one array code: r x n stripes, m column parities per
// row, and s = 2 global parities.
struct CodeParams {
    std::shared_ptr<const Algebra> alg;
    Variant variant = Variant::kSD;
    unsigned r = 0; // rows per stripe
    unsigned n = 0; // columns (disks)
    unsigned m = 0; // column parities per row
    unsigned s = 2; // global parities (this construction fixes s = 2)

    // Global-row stride of the PMDS layout.
    unsigned N() const { return (m + 1) * (n - m - 1) + 1; }
    std::uint64_t stripe_len() const { return std::uint64_t{r} * n; }
    std::size_t parity_count() const { return std::size_t{m} * r + 2; }
    std::size_t data_count() const {
        return std::size_t{r} * (n - m) - 2;
    }

    std::string describe() const;
};

// Throws Error naming the violated bound; returns human-readable
// warnings for accepted-but-degenerate parameters (currently r = 1,
// where the cross-row cases are vacuous).
std::vector<std::string> validate(const CodeParams& params);

// The (mr+2) x rn parity-check matrix: r diagonal copies of the m x n
// Vandermonde block (row k, column i holds alpha^(k*i)) plus two global
// bottom rows. Global row 1 at block j (0-based), column i is
// alpha^(m*i); global row 2 is alpha^(-(j*stride + i)) with the
// variant's stride.
struct ParityCheckMatrix {
    CodeParams params;
    Matrix matrix;

    std::size_t local_rows() const { return std::size_t{params.m} * params.r; }
    std::size_t global_row1() const { return local_rows(); }
    std::size_t global_row2() const { return local_rows() + 1; }
    // Rows of the j-th (0-based) diagonal block: [first, last).
    std::pair<std::size_t, std::size_t> block_rows(unsigned j) const {
        return {std::size_t{j} * params.m, std::size_t{j + 1} * params.m};
    }
    std::pair<std::size_t, std::size_t> block_cols(unsigned j) const {
        return {std::size_t{j} * params.n, std::size_t{j + 1} * params.n};
    }
};

ParityCheckMatrix build_parity_check(const CodeParams& params);

// Inputs of the cross-row determinant identity: two lists of m+1 column
// indices and the row gap ell between the two rows carrying extras.
struct LemmaInputs {
    std::vector<unsigned> i_list; // columns in the upper row
    std::vector<unsigned> j_list; // columns in the lower row
    unsigned ell = 1;             // row gap, 1..r-1 (0 tolerated as degenerate)
    unsigned n = 0;
    unsigned r = 0;

    unsigned m() const { return static_cast<unsigned>(i_list.size()) - 1; }
    // Range/shape validation. Duplicate indices are allowed: both
    // evaluation routes vanish identically on them, and tests exercise
    // that. check_distinct() additionally rejects duplicates (CLI use).
    void check() const;
    void check_distinct() const;
    std::string describe() const;
};

// The (2m+2) x (2m+2) matrix whose determinant decides cross-row
// solvability: two (m x (m+1)) Vandermonde blocks on the diagonal
// (powers 0..m-1), a penultimate row of alpha^(m*index), and a final
// row alpha^(-i_u) | alpha^(-n*ell - j_u).
Matrix build_lemma_matrix(std::shared_ptr<const Algebra> alg, const LemmaInputs& inp);

// Closed-form product expansion of that determinant:
//   (prod_{u<v} (a^{i_u}+a^{i_v})(a^{j_u}+a^{j_v})) * (a^{-sum i} + a^{-n*ell - sum j}).
std::uint64_t delta_closed_form(const Algebra& alg, const LemmaInputs& inp);

// True iff n*ell + sum(j) - sum(i) is nonzero mod order(alpha); agrees
// with delta_closed_form being a unit.
bool delta_nonzero_condition(const Algebra& alg, const LemmaInputs& inp);

// Parsed form of the line-based `key=value` code config file.
struct CodeConfig {
    Variant variant = Variant::kSD;
    unsigned r = 0, n = 0, m = 0;
    enum class AlgebraKind { kField, kRing } kind = AlgebraKind::kField;
    unsigned w = 0;                        // field only
    std::optional<std::uint64_t> modulus;  // field only; default if absent
    unsigned p = 0;                        // ring only
};

CodeConfig parse_code_config(std::istream& in);
CodeConfig load_code_config(const std::string& path);
// Builds the algebra and validates; warnings (if any) appended to *warnings.
CodeParams make_code_params(const CodeConfig& cfg, std::vector<std::string>* warnings = nullptr);

} // namespace sdpmds
