#include "fol/vector_field.hpp"

#include "fol/errors.hpp"
#include "fol/linalg.hpp"

namespace fol {

VectorField::VectorField(std::vector<Polynomial> comps) : components(std::move(comps)) {
    if (components.empty()) throw DimensionError("vector field needs at least one component");
    for (const auto& p : components)
        if (p.nvars() != components.size())
            throw DimensionError("vector field components must be polynomials in nvars variables");
}

bool VectorField::is_zero() const {
    for (const auto& p : components)
        if (!p.is_zero()) return false;
    return true;
}

VectorField VectorField::coordinate(size_t nvars, size_t index) {
    std::vector<Polynomial> comps(nvars, Polynomial::zero(nvars));
    comps.at(index) = Polynomial::constant(nvars, GaussianRational(1));
    return VectorField(std::move(comps));
}

std::vector<GaussianRational> vf_eval(const VectorField& v, const Point& x) {
    if (x.size() != v.nvars()) throw DimensionError("point dimension differs from field dimension");
    std::vector<GaussianRational> out;
    out.reserve(v.nvars());
    for (const auto& p : v.components) out.push_back(p.eval(x));
    return out;
}

Polynomial vf_apply(const VectorField& v, const Polynomial& f) {
    if (f.nvars() != v.nvars())
        throw DimensionError("polynomial dimension differs from field dimension");
    Polynomial out = Polynomial::zero(f.nvars());
    for (size_t j = 0; j < v.nvars(); ++j) out += v.components[j] * f.partial(j);
    return out;
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
    if (v.nvars() != w.nvars()) throw DimensionError("bracket of fields with different dimensions");
    std::vector<Polynomial> comps;
    comps.reserve(v.nvars());
    for (size_t j = 0; j < v.nvars(); ++j)
        comps.push_back(vf_apply(v, w.components[j]) - vf_apply(w, v.components[j]));
    return VectorField(std::move(comps));
}

std::vector<VectorField> kernel_generators(const std::vector<std::vector<Polynomial>>& mat) {
    if (mat.empty()) throw Error("kernel of an empty matrix");
    auto kernel = polynomial_kernel(mat);
    std::vector<VectorField> out;
    out.reserve(kernel.size());
    for (auto& vec : kernel) out.emplace_back(std::move(vec));
    return out;
}

} // namespace fol
