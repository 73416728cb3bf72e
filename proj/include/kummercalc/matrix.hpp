#ifndef KUMMERCALC_MATRIX_HPP
#define KUMMERCALC_MATRIX_HPP

#include "kummercalc/int_types.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace kummer {

// Dense integer matrix, row major. Everything downstream (group completions,
// cokernels, torsor structure groups) reduces to exact linear algebra on
// these.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    Vec apply(const Vec& x) const; // matrix * column vector
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_identity() const;
    bool is_zero() const;

    // Exact determinant (fraction-free Bareiss elimination); square only.
    Int det() const;

    std::string to_string() const;

    // row/column operations used by the normal-form algorithms
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SnfDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::vector<Int> diagonal() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& A);

// Row-style Hermite normal form of the row lattice of A: returns the
// canonical basis (nonzero rows only, pivots positive, entries above each
// pivot reduced into [0, pivot)). Two matrices span the same row lattice
// iff their HNFs are equal.
IntMatrix hnf_rows(const IntMatrix& A);

// Same, also returning a unimodular T with T * A = [H; 0].
struct HnfResult {
    IntMatrix hnf;       // full rows x cols echelon (zero rows kept)
    IntMatrix transform; // unimodular, transform * A = hnf
    std::size_t rank;
};
HnfResult hnf_rows_with_transform(const IntMatrix& A);

// Inverse of a unimodular matrix (throws DomainError if |det| != 1).
IntMatrix inverse_unimodular(const IntMatrix& U);

// Coordinates of x in the row lattice of an HNF basis H, or nullopt if x is
// not in the lattice. H must come from hnf_rows.
std::optional<Vec> hnf_solve(const IntMatrix& H, const Vec& x);

// Basis of the right kernel {v : A v = 0}, one basis vector per row.
std::vector<Vec> kernel_basis(const IntMatrix& A);

// small vector helpers shared across the library
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Int& k, const Vec& a);
bool vec_is_zero(const Vec& a);
Int dot(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& a);

} // namespace kummer

#endif
