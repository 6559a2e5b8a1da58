#include "polyharm/exact_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace polyharm {

namespace {

std::string key_brief(const TermKey& k) {
    return "u^" + std::to_string(k.u_pow) + " v^" + std::to_string(k.v_pow) + " t^" +
           std::to_string(k.t_pow) + " exp(" + k.u_weight.str() + "," + k.v_weight.str() + "," +
           k.t_weight.str() + ")";
}

} // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

std::vector<GaussianRational> ExactMatrix::apply(const std::vector<GaussianRational>& v) const {
    if (v.size() != cols_)
        throw DimensionMismatch("apply: " + std::to_string(cols_) + " cols vs vector of " +
                                std::to_string(v.size()));
    std::vector<GaussianRational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        GaussianRational acc;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatch(std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
                                std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    ExactMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    return c;
}

ExactMatrix mat_pow(const ExactMatrix& m, std::uint32_t r) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("mat_pow needs a square matrix, got " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()));
    ExactMatrix result = ExactMatrix::identity(m.rows());
    ExactMatrix base = m;
    while (r > 0) {
        if (r & 1u) result = result * base;
        r >>= 1u;
        if (r > 0) base = base * base;
    }
    return result;
}

EchelonForm reduced_echelon(ExactMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    GaussianRational prev(1);
    std::size_t r = 0;

    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pr = r;
        while (pr < rows && m.at(pr, col).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));

        const GaussianRational pivot = m.at(r, col);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const GaussianRational head = m.at(i, col);
            for (std::size_t j = col + 1; j < cols; ++j)
                m.at(i, j) = (pivot * m.at(i, j) - head * m.at(r, j)) / prev;
            m.at(i, col) = GaussianRational(0);
        }
        prev = pivot;
        pivots.push_back(col);
        ++r;
    }

    // Division pass: unit pivots, then clear above.
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        const std::size_t col = pivots[p];
        const GaussianRational inv = GaussianRational(1) / m.at(p, col);
        for (std::size_t j = col; j < cols; ++j)
            if (!m.at(p, j).is_zero()) m.at(p, j) *= inv;
    }
    for (std::size_t p = pivots.size(); p-- > 0;) {
        const std::size_t col = pivots[p];
        for (std::size_t i = 0; i < p; ++i) {
            const GaussianRational factor = m.at(i, col);
            if (factor.is_zero()) continue;
            for (std::size_t j = col; j < cols; ++j)
                m.at(i, j) -= factor * m.at(p, j);
        }
    }

    return EchelonForm{std::move(m), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return reduced_echelon(m).rank(); }

std::vector<std::vector<GaussianRational>> nullspace(const ExactMatrix& m) {
    const std::size_t cols = m.cols();
    EchelonForm ech = reduced_echelon(m);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<GaussianRational> v(cols);
        v[fc] = GaussianRational(1);
        for (std::size_t p = 0; p < ech.pivot_cols.size(); ++p)
            v[ech.pivot_cols[p]] = -ech.rref.at(p, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

ExactMatrix matrix_of_tau(GeometryId g, const std::vector<Term>& basis) {
    std::map<TermKey, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].coeff.is_zero())
            throw std::invalid_argument("matrix_of_tau: basis term " + std::to_string(i) +
                                        " has zero coefficient");
        if (!index.emplace(basis[i].key, i).second)
            throw std::invalid_argument("matrix_of_tau: duplicate basis key " +
                                        key_brief(basis[i].key));
    }

    ExactMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Expression image = tau(g, Expression::from_term(basis[j]));
        for (const auto& [key, coeff] : image.terms()) {
            auto it = index.find(key);
            if (it == index.end())
                throw EscapesBasis("tau(basis[" + std::to_string(j) + "]) contains " +
                                   key_brief(key));
            m.at(it->second, j) = coeff / basis[it->second].coeff;
        }
    }
    return m;
}

Expression combination(const std::vector<Term>& basis, const std::vector<GaussianRational>& coeffs) {
    if (basis.size() != coeffs.size())
        throw DimensionMismatch("combination: " + std::to_string(basis.size()) + " basis terms vs " +
                                std::to_string(coeffs.size()) + " coefficients");
    std::vector<Term> raw;
    raw.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        raw.push_back(Term{basis[i].coeff * coeffs[i], basis[i].key});
    return Expression::normalize(raw);
}

std::vector<GaussianRational> coordinates_in_basis(const Expression& f,
                                                   const std::vector<Term>& basis) {
    std::map<TermKey, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].key, i);
    std::vector<GaussianRational> coords(basis.size());
    for (const auto& [key, coeff] : f.terms()) {
        auto it = index.find(key);
        if (it == index.end()) throw EscapesBasis("expression contains " + key_brief(key));
        coords[it->second] = coeff / basis[it->second].coeff;
    }
    return coords;
}

} // namespace polyharm
