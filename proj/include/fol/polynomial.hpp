#ifndef FOL_POLYNOMIAL_HPP
#define FOL_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fol/rational.hpp"

namespace fol {

using Exponents = std::vector<uint32_t>;

// Sparse multivariate polynomial over Q(i) in a fixed number of variables.
// Canonical form: no zero coefficients stored, every exponent vector has
// length nvars, the zero polynomial is the empty map.
class Polynomial {
  public:
    using TermMap = std::map<Exponents, GaussianRational>;

    explicit Polynomial(size_t nvars) : nvars_(nvars) {}
    Polynomial(size_t nvars, const GaussianRational& c) : nvars_(nvars) {
        if (!c.is_zero()) terms_[Exponents(nvars, 0)] = c;
    }

    static Polynomial zero(size_t nvars) { return Polynomial(nvars); }
    static Polynomial constant(size_t nvars, const GaussianRational& c) { return Polynomial(nvars, c); }
    static Polynomial variable(size_t nvars, size_t index);
    static Polynomial monomial(size_t nvars, const Exponents& e, const GaussianRational& c);

    size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    uint32_t total_degree() const; // 0 for the zero polynomial

    // True when the polynomial has no term involving the given variable.
    bool independent_of(size_t var_index) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator-() const;
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
    Polynomial pow(uint32_t e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Formal partial derivative with respect to one variable.
    Polynomial partial(size_t var_index) const;

    GaussianRational eval(const Point& x) const;

    // Substitute an exact zero for the listed variables (dimension preserved).
    Polynomial substitute_zero(const std::vector<size_t>& var_indices) const;
    // Keep only the listed variables (all others must not occur), renumbering
    // them to 0..keep.size()-1 in the given order.
    Polynomial project_to(const std::vector<size_t>& keep) const;
    // Re-embed into a larger variable count; variable j maps to position map[j].
    Polynomial embed(size_t new_nvars, const std::vector<size_t>& var_map) const;

    // Grammar-conformant text; parse(str(p)) == p.
    std::string str() const;

  private:
    void add_term(const Exponents& e, const GaussianRational& c);

    size_t nvars_;
    TermMap terms_;

    friend Polynomial poly_parse(const std::string&, size_t);
};

// Parse expression text over variables X1..Xn (z1..zn also accepted).
// Throws ParseError with position on syntax errors and on variable
// indices exceeding nvars.
Polynomial poly_parse(const std::string& text, size_t nvars);

// Exact quotient p/q when q divides p; throws Error otherwise.
// Used by fraction-free elimination where divisibility is guaranteed.
Polynomial poly_exact_div(const Polynomial& p, const Polynomial& q);

} // namespace fol

#endif
