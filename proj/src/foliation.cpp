#include "fol/foliation.hpp"

#include <algorithm>

#include "fol/errors.hpp"
#include "fol/linalg.hpp"
#include "fol/sampling.hpp"

namespace fol {

Foliation Foliation::from_generators(size_t nvars, std::vector<VectorField> gens,
                                     std::optional<size_t> declared_rank) {
    if (nvars == 0) throw DimensionError("ambient dimension must be positive");
    if (gens.empty()) throw DimensionError("generator presentation needs at least one field");
    for (const auto& g : gens) {
        if (g.nvars() != nvars)
            throw DimensionError("generator dimension differs from ambient dimension");
        if (g.is_zero()) throw Error("zero vector field is not a valid generator");
    }
    if (declared_rank && (*declared_rank < 1 || *declared_rank >= nvars))
        throw DimensionError("declared rank must satisfy 1 <= k < n");
    Foliation f;
    f.nvars_ = nvars;
    f.kind_ = PresentationKind::Generators;
    f.generators_ = std::move(gens);
    f.declared_rank_ = declared_rank;
    return f;
}

Foliation Foliation::from_level_sets(size_t nvars, std::vector<Polynomial> levels,
                                     std::optional<size_t> declared_rank) {
    if (nvars == 0) throw DimensionError("ambient dimension must be positive");
    if (levels.empty() || levels.size() >= nvars)
        throw DimensionError("level-set presentation needs between 1 and n-1 polynomials");
    for (const auto& p : levels)
        if (p.nvars() != nvars)
            throw DimensionError("level-set polynomial dimension differs from ambient dimension");
    if (declared_rank && (*declared_rank < 1 || *declared_rank >= nvars))
        throw DimensionError("declared rank must satisfy 1 <= k < n");

    // Tangent fields annihilate every defining polynomial: right kernel of
    // the differential matrix (dF_i/dX_j).
    std::vector<std::vector<Polynomial>> diff;
    diff.reserve(levels.size());
    for (const auto& p : levels) {
        std::vector<Polynomial> row;
        row.reserve(nvars);
        for (size_t j = 0; j < nvars; ++j) row.push_back(p.partial(j));
        diff.push_back(std::move(row));
    }
    std::vector<VectorField> gens = kernel_generators(diff);
    if (gens.empty()) throw Error("level-set presentation admits no tangent fields");

    Foliation f;
    f.nvars_ = nvars;
    f.kind_ = PresentationKind::LevelSets;
    f.generators_ = std::move(gens);
    f.level_sets_ = std::move(levels);
    f.declared_rank_ = declared_rank;
    return f;
}

TangentFiber tangent_fiber(const Foliation& f, const Point& x) {
    if (x.size() != f.nvars()) throw DimensionError("point dimension differs from ambient dimension");
    std::vector<std::vector<GaussianRational>> values;
    values.reserve(f.generators().size());
    for (const auto& g : f.generators()) values.push_back(vf_eval(g, x));
    TangentFiber out;
    for (size_t idx : independent_subset(values)) out.basis.push_back(values[idx]);
    out.dim = out.basis.size();
    return out;
}

size_t generic_rank(const Foliation& f, uint64_t seed) {
    size_t best = 0;
    for (size_t t = 0; t < 8; ++t) {
        Point x = sample_point(f.nvars(), derive_seed(seed, t));
        best = std::max(best, tangent_fiber(f, x).dim);
    }
    if (f.declared_rank() && *f.declared_rank() != best)
        throw ContradictionError("declared rank " + std::to_string(*f.declared_rank()) +
                                 " contradicts sampled rank " + std::to_string(best));
    if (best == 0) throw Error("foliation has sampled rank 0");
    return best;
}

bool is_singular(const Foliation& f, const Point& x, uint64_t seed) {
    return tangent_fiber(f, x).dim < generic_rank(f, seed);
}

StratumReport stratum_report(const Foliation& f, const Point& x, uint64_t seed) {
    size_t k = generic_rank(f, seed);
    StratumReport r;
    r.point = x;
    r.fiber_dim = tangent_fiber(f, x).dim;
    r.singular = r.fiber_dim < k;
    r.stratum_index = r.singular ? k - r.fiber_dim : 0;
    return r;
}

std::vector<Polynomial> singular_equations(const Foliation& f) {
    if (f.kind() != PresentationKind::LevelSets)
        throw UnsupportedPresentationError(
            "singular equations need a level-set presentation");
    const auto& levels = f.level_sets();
    size_t n = f.nvars();
    size_t m = levels.size();

    // The defining system is a submersion away from the singular set, so the
    // singular set is exactly where the Jacobian drops below full row rank m.
    std::vector<std::vector<Polynomial>> jac;
    jac.reserve(m);
    for (const auto& p : levels) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (size_t j = 0; j < n; ++j) row.push_back(p.partial(j));
        jac.push_back(std::move(row));
    }

    // Enumerate column subsets of size m in lexicographic order.
    std::vector<Polynomial> minors;
    std::vector<size_t> cols(m);
    for (size_t i = 0; i < m; ++i) cols[i] = i;
    while (true) {
        std::vector<std::vector<Polynomial>> sub(m);
        for (size_t i = 0; i < m; ++i) {
            sub[i].reserve(m);
            for (size_t c : cols) sub[i].push_back(jac[i][c]);
        }
        minors.push_back(polynomial_det(sub));

        // Next lexicographic m-subset of {0,...,n-1}.
        size_t t = m;
        while (t > 0 && cols[t - 1] == n - m + (t - 1)) --t;
        if (t == 0) break;
        ++cols[t - 1];
        for (size_t i = t; i < m; ++i) cols[i] = cols[i - 1] + 1;
    }
    return minors;
}

bool involutivity_check(const Foliation& f, uint64_t seed, size_t trials) {
    const auto& gens = f.generators();
    if (gens.size() < 2) return true;
    std::vector<Point> pts = points_for(f.nvars(), seed, trials);
    std::vector<std::vector<std::vector<GaussianRational>>> spans;
    spans.reserve(pts.size());
    for (const Point& x : pts) {
        std::vector<std::vector<GaussianRational>> span;
        span.reserve(gens.size());
        for (const auto& g : gens) span.push_back(vf_eval(g, x));
        spans.push_back(std::move(span));
    }
    for (size_t a = 0; a < gens.size(); ++a) {
        for (size_t b = a + 1; b < gens.size(); ++b) {
            VectorField br = lie_bracket(gens[a], gens[b]);
            if (br.is_zero()) continue;
            for (size_t t = 0; t < pts.size(); ++t)
                if (!in_span(vf_eval(br, pts[t]), spans[t])) return false;
        }
    }
    return true;
}

bool annihilation_check(const std::vector<VectorField>& gens,
                        const std::vector<Polynomial>& levels) {
    for (const auto& g : gens)
        for (const auto& p : levels)
            if (!vf_apply(g, p).is_zero()) return false;
    return true;
}

} // namespace fol
