#include "fol/linalg.hpp"

#include <algorithm>
#include <iterator>

#include "fol/errors.hpp"

namespace fol {

ExactMatrix ExactMatrix::identity(size_t n) {
    ExactMatrix m(n, n);
    for (size_t k = 0; k < n; ++k) m.at(k, k) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    if (rows.empty()) return ExactMatrix(0, 0);
    ExactMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw DimensionError("ragged rows in matrix");
        for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

void ExactMatrix::append_row(const std::vector<GaussianRational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw DimensionError("appended row has wrong width");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
}

size_t matrix_rank(const ExactMatrix& m) {
    ExactMatrix a = m;
    size_t rank = 0;
    size_t row = 0;
    GaussianRational prev(1);
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        size_t pivot = row;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(pivot, j));
        for (size_t i = row + 1; i < a.rows(); ++i) {
            for (size_t j = col + 1; j < a.cols(); ++j)
                a.at(i, j) = (a.at(row, col) * a.at(i, j) - a.at(i, col) * a.at(row, j)) / prev;
            a.at(i, col) = GaussianRational(0);
        }
        prev = a.at(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

bool in_span(const std::vector<GaussianRational>& v,
             const std::vector<std::vector<GaussianRational>>& rows) {
    ExactMatrix base = ExactMatrix::from_rows(rows);
    size_t r0 = matrix_rank(base);
    ExactMatrix ext = base;
    if (rows.empty()) ext = ExactMatrix(0, v.size());
    ext.append_row(v);
    return matrix_rank(ext) == r0;
}

std::vector<size_t> independent_subset(const std::vector<std::vector<GaussianRational>>& rows) {
    std::vector<size_t> picked;
    if (rows.empty()) return picked;
    ExactMatrix acc(0, rows[0].size());
    size_t rank = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        ExactMatrix trial = acc;
        trial.append_row(rows[i]);
        size_t r = matrix_rank(trial);
        if (r > rank) {
            acc = std::move(trial);
            rank = r;
            picked.push_back(i);
        }
    }
    return picked;
}

// --- polynomial matrices -------------------------------------------------

namespace {

size_t poly_cols(const std::vector<std::vector<Polynomial>>& mat) {
    if (mat.empty()) throw Error("empty polynomial matrix");
    size_t n = mat[0].size();
    size_t vars = n ? mat[0][0].nvars() : 0;
    for (const auto& row : mat) {
        if (row.size() != n) throw DimensionError("ragged polynomial matrix");
        for (const auto& p : row)
            if (p.nvars() != vars) throw DimensionError("inconsistent nvars in polynomial matrix");
    }
    return n;
}

} // namespace

std::vector<std::vector<Polynomial>> polynomial_kernel(
    const std::vector<std::vector<Polynomial>>& mat) {
    size_t n = poly_cols(mat);
    size_t m = mat.size();
    if (n == 0) return {};
    size_t vars = mat[0][0].nvars();
    std::vector<std::vector<Polynomial>> a = mat;

    // Fraction-free Gauss-Jordan: after installing pivot q, every earlier
    // pivot entry equals the current pivot value and pivot columns are zero
    // off their pivot row. Divisions by the previous pivot are exact.
    Polynomial prev = Polynomial::constant(vars, GaussianRational(1));
    std::vector<size_t> pivot_cols;
    std::vector<size_t> pivot_rows;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t p = r;
        while (p < m && a[p][c].is_zero()) ++p;
        if (p == m) continue;
        if (p != r) std::swap(a[p], a[r]);
        for (size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            for (size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                a[i][j] = poly_exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
            }
            a[i][c] = Polynomial::zero(vars);
        }
        prev = a[r][c];
        pivot_cols.push_back(c);
        pivot_rows.push_back(r);
        ++r;
    }

    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_cols) is_pivot[c] = true;
    const Polynomial& pivot_value = prev; // shared by all pivot entries now

    std::vector<std::vector<Polynomial>> kernel;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Polynomial> v(n, Polynomial::zero(vars));
        v[f] = pivot_value;
        for (size_t t = 0; t < pivot_cols.size(); ++t) v[pivot_cols[t]] = -a[pivot_rows[t]][f];
        make_primitive(v);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

Polynomial polynomial_det(const std::vector<std::vector<Polynomial>>& mat) {
    size_t n = poly_cols(mat);
    if (n != mat.size()) throw DimensionError("determinant of a non-square matrix");
    size_t vars = mat[0][0].nvars();
    std::vector<std::vector<Polynomial>> a = mat;
    Polynomial prev = Polynomial::constant(vars, GaussianRational(1));
    bool negate = false;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return Polynomial::zero(vars);
        if (p != k) {
            std::swap(a[p], a[k]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = poly_exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = Polynomial::zero(vars);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

void make_primitive(std::vector<Polynomial>& vec) {
    // Least common denominator over all re/im parts, then gcd of the
    // resulting integers; scaling a generator by a nonzero rational does not
    // change the module it spans pointwise.
    mpz_class lcm_den(1);
    bool any = false;
    for (const auto& p : vec) {
        for (const auto& [e, c] : p.terms()) {
            any = true;
            mpz_class d1 = c.re().get_den(), d2 = c.im().get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d1.get_mpz_t());
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d2.get_mpz_t());
        }
    }
    if (!any) return;
    mpz_class g(0);
    for (const auto& p : vec) {
        for (const auto& [e, c] : p.terms()) {
            mpz_class a = c.re().get_num() * (lcm_den / c.re().get_den());
            mpz_class b = c.im().get_num() * (lcm_den / c.im().get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
        }
    }
    mpq_class scale(lcm_den, g);
    scale.canonicalize();
    GaussianRational factor{scale};

    // Sign: first nonzero component's grlex-leading coefficient gets a
    // positive real part (positive imaginary if purely imaginary).
    for (auto& p : vec) p = factor * p;
    auto deg = [](const Exponents& e) {
        uint32_t d = 0;
        for (uint32_t x : e) d += x;
        return d;
    };
    for (const auto& p : vec) {
        if (p.is_zero()) continue;
        auto lead = p.terms().begin();
        for (auto it = std::next(lead); it != p.terms().end(); ++it) {
            uint32_t d = deg(it->first), bd = deg(lead->first);
            if (d > bd || (d == bd && it->first > lead->first)) lead = it;
        }
        const GaussianRational& c = lead->second;
        if (c.re() < 0 || (c.re() == 0 && c.im() < 0))
            for (auto& q : vec) q = GaussianRational(-1) * q;
        break;
    }
}

} // namespace fol
