#ifndef FOL_LINALG_HPP
#define FOL_LINALG_HPP

#include <vector>

#include "fol/polynomial.hpp"
#include "fol/rational.hpp"

namespace fol {

// Dense matrix over Q(i).
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    static ExactMatrix identity(size_t n);
    static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const GaussianRational& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    GaussianRational& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }

    void append_row(const std::vector<GaussianRational>& row);

  private:
    size_t rows_, cols_;
    std::vector<GaussianRational> entries_;
};

// Exact rank via fraction-free (Bareiss) elimination, pivoting on the
// lowest-index nonzero column with the first nonzero row.
size_t matrix_rank(const ExactMatrix& m);

// rank(rows ∪ {v}) == rank(rows)?
bool in_span(const std::vector<GaussianRational>& v,
             const std::vector<std::vector<GaussianRational>>& rows);

// Greedy maximal independent subset, keeping rows in input order.
// Returns indices into `rows`.
std::vector<size_t> independent_subset(const std::vector<std::vector<GaussianRational>>& rows);

// --- polynomial matrices -------------------------------------------------

// Right kernel of an m x n matrix of polynomials over the rational function
// field, by fraction-free Gauss-Jordan elimination with exact polynomial
// division, denominators cleared. Each output vector annihilates every row
// as a polynomial identity and is normalized to integer-primitive form.
std::vector<std::vector<Polynomial>> polynomial_kernel(
    const std::vector<std::vector<Polynomial>>& mat);

// Determinant of a square polynomial matrix (fraction-free elimination).
Polynomial polynomial_det(const std::vector<std::vector<Polynomial>>& mat);

// Scale by the inverse rational content so all coefficients become integers
// (Gaussian integers) with overall gcd 1; sign-normalize the first nonzero
// leading coefficient. Applied across a whole vector of polynomials.
void make_primitive(std::vector<Polynomial>& vec);

} // namespace fol

#endif
