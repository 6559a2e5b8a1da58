#ifndef POLYHARM_EXACT_MATRIX_HPP
#define POLYHARM_EXACT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "polyharm/geometry.hpp"
#include "polyharm/rational.hpp"
#include "polyharm/term.hpp"

namespace polyharm {

/// Dense matrix over GaussianRational; all arithmetic exact.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> entries_; // row-major
};

/// Exact M^r; M⁰ is the identity. Throws DimensionMismatch unless square.
ExactMatrix mat_pow(const ExactMatrix& m, std::uint32_t r);

struct EchelonForm {
    ExactMatrix rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form. Forward pass is fraction-free
/// (Bareiss-style two-by-two determinant updates divided by the previous
/// pivot) to control intermediate growth; a final division pass
/// normalizes the pivots. Pivoting is deterministic: first nonzero row
/// in column order.
EchelonForm reduced_echelon(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

/// Basis of ker(M) derived from the reduced echelon form, one vector per
/// free column in ascending column order; deterministic.
std::vector<std::vector<GaussianRational>> nullspace(const ExactMatrix& m);

/// Matrix M of τ restricted to the span of the given basis terms:
/// τ(basis_j) = Σ_i M(i,j)·basis_i. Throws EscapesBasis if the image of
/// some basis element has a component outside the span.
ExactMatrix matrix_of_tau(GeometryId g, const std::vector<Term>& basis);

/// Σ coeffs[i]·basis[i] as a canonical Expression.
Expression combination(const std::vector<Term>& basis, const std::vector<GaussianRational>& coeffs);

/// Coordinates of f in the basis; throws EscapesBasis if f is outside the span.
std::vector<GaussianRational> coordinates_in_basis(const Expression& f,
                                                   const std::vector<Term>& basis);

} // namespace polyharm

#endif
