#ifndef FOL_VECTOR_FIELD_HPP
#define FOL_VECTOR_FIELD_HPP

#include <vector>

#include "fol/polynomial.hpp"
#include "fol/rational.hpp"

namespace fol {

// Polynomial vector field on C^n: one component polynomial per coordinate,
// all over the same variable count.
struct VectorField {
    std::vector<Polynomial> components;

    VectorField() = default;
    explicit VectorField(std::vector<Polynomial> comps);

    size_t nvars() const { return components.size(); }
    bool is_zero() const;

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.components == b.components;
    }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    // d/dX_{index} (0-based).
    static VectorField coordinate(size_t nvars, size_t index);
};

// Evaluate each component at x.
std::vector<GaussianRational> vf_eval(const VectorField& v, const Point& x);

// Derivation action: sum_j components[j] * df/dX_j.
Polynomial vf_apply(const VectorField& v, const Polynomial& f);

// [v,w]_j = v(w_j) - w(v_j).
VectorField lie_bracket(const VectorField& v, const VectorField& w);

// Right-kernel basis of a polynomial matrix, packaged as vector fields.
// Rows are typically differentials of level-set polynomials; every output
// annihilates every row as a polynomial identity. Outputs are primitive
// (integer coefficients, content 1) and span the kernel over the rational
// function field — a working presentation, with no fullness claim for the
// module it generates.
std::vector<VectorField> kernel_generators(const std::vector<std::vector<Polynomial>>& mat);

} // namespace fol

#endif
