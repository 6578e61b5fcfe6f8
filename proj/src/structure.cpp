#include "fol/structure.hpp"

#include <algorithm>
#include <set>

#include "fol/errors.hpp"
#include "fol/linalg.hpp"
#include "fol/sampling.hpp"

namespace fol {

FoliationProfile::FoliationProfile(size_t n_, size_t k_, size_t r_, size_t s_)
    : n(n_), k(k_), r(r_), s(s_) {
    if (!(n > k && k > r && r >= s))
        throw ProfileError("profile must satisfy n > k > r >= s >= 0, got " + str());
}

std::string FoliationProfile::str() const {
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + "," +
           std::to_string(s) + ")";
}

std::vector<size_t> CoordinateRoles::z_zero_indices(size_t n) const {
    std::set<size_t> in_z(z.begin(), z.end());
    std::vector<size_t> out;
    for (size_t j = 0; j < n; ++j)
        if (!in_z.count(j)) out.push_back(j);
    return out;
}

bool tangency_check(const Foliation& f, const std::vector<size_t>& z_zero_indices,
                    uint64_t seed, size_t trials) {
    for (const Point& x : points_for(f.nvars(), seed, trials, z_zero_indices)) {
        TangentFiber fiber = tangent_fiber(f, x);
        for (const auto& vec : fiber.basis)
            for (size_t j : z_zero_indices)
                if (!vec[j].is_zero()) return false;
    }
    return true;
}

Point flow_constant_field(const std::vector<GaussianRational>& t, const Point& p, size_t s) {
    if (t.size() != s) throw DimensionError("flow parameter count differs from s");
    if (s > p.size()) throw DimensionError("flow parameter count exceeds point dimension");
    Point out = p;
    for (size_t j = 0; j < s; ++j) out[j] += t[j];
    return out;
}

namespace {

void validate_roles(const FoliationProfile& pr, const CoordinateRoles& roles, size_t nvars) {
    if (pr.n != nvars)
        throw DimensionError("profile ambient dimension differs from foliation dimension");
    auto as_set = [&](const std::vector<size_t>& v, const char* name) {
        std::set<size_t> s(v.begin(), v.end());
        if (s.size() != v.size()) throw ProfileError(std::string(name) + " indices repeat");
        if (!s.empty() && *s.rbegin() >= nvars)
            throw ProfileError(std::string(name) + " index out of range");
        return s;
    };
    std::set<size_t> z = as_set(roles.z, "z");
    std::set<size_t> az = as_set(roles.az, "az");
    std::set<size_t> bz = as_set(roles.bz, "bz");
    std::set<size_t> d = as_set(roles.d, "d");
    if (z.size() != pr.r) throw ProfileError("z role must list r coordinates");
    if (az.size() != pr.s) throw ProfileError("az role must list s coordinates");
    if (bz.size() != pr.r - pr.s) throw ProfileError("bz role must list r-s coordinates");
    if (d.size() != pr.n - pr.s) throw ProfileError("d role must list n-s coordinates");
    for (size_t j : az)
        if (!z.count(j)) throw ProfileError("az must be a subset of z");
    for (size_t j : bz)
        if (!z.count(j) || az.count(j)) throw ProfileError("bz must equal z minus az");
    if (az.size() + bz.size() != z.size()) throw ProfileError("bz must equal z minus az");
    for (size_t j = 0; j < nvars; ++j)
        if (az.count(j) == d.count(j)) throw ProfileError("d must be the complement of az");
}

// Position of each ambient d-coordinate inside eta's renumbered variables.
std::vector<size_t> eta_positions(const std::vector<size_t>& d_sorted, size_t nvars) {
    std::vector<size_t> pos(nvars, SIZE_MAX);
    for (size_t t = 0; t < d_sorted.size(); ++t) pos[d_sorted[t]] = t;
    return pos;
}

Point project_point(const Point& x, const std::vector<size_t>& d_sorted) {
    Point out = Point::zero(d_sorted.size());
    for (size_t t = 0; t < d_sorted.size(); ++t) out[t] = x[d_sorted[t]];
    return out;
}

} // namespace

DecompositionReport build_decomposition(const Foliation& f, const FoliationProfile& profile,
                                        const CoordinateRoles& roles, uint64_t seed) {
    validate_roles(profile, roles, f.nvars());
    const size_t n = profile.n, k = profile.k, r = profile.r, s = profile.s;

    std::vector<size_t> az_sorted = roles.az;
    std::sort(az_sorted.begin(), az_sorted.end());
    std::vector<size_t> d_sorted = roles.d;
    std::sort(d_sorted.begin(), d_sorted.end());
    std::vector<size_t> bz_sorted = roles.bz;
    std::sort(bz_sorted.begin(), bz_sorted.end());
    std::vector<size_t> z_zero = roles.z_zero_indices(n);

    // Restrict generators to the d-slice: set az coordinates to zero, keep
    // only fields that then have no az components, renumber into n-s
    // variables.
    std::vector<VectorField> eta_gens;
    for (const auto& g : f.generators()) {
        std::vector<Polynomial> restricted;
        restricted.reserve(n);
        bool keep = true;
        for (const auto& comp : g.components) restricted.push_back(comp.substitute_zero(az_sorted));
        for (size_t j : az_sorted)
            if (!restricted[j].is_zero()) {
                keep = false;
                break;
            }
        if (!keep) continue;
        std::vector<Polynomial> comps;
        comps.reserve(d_sorted.size());
        bool zero = true;
        for (size_t j : d_sorted) {
            comps.push_back(restricted[j].project_to(d_sorted));
            if (!comps.back().is_zero()) zero = false;
        }
        if (!zero) eta_gens.push_back(VectorField(std::move(comps)));
    }
    if (eta_gens.empty())
        throw DecompositionError("eta_rank", "no generators survive restriction to the d-slice");

    DecompositionReport report(Foliation::from_generators(n - s, std::move(eta_gens)));
    report.profile = profile;
    report.az_indices = az_sorted;
    report.bz_indices = bz_sorted;
    report.d_indices = d_sorted;
    report.eta_profile = FoliationProfile(n - s, k - s, r - s, 0);

    // (a) fibers along Z stay tangent to Z
    bool ok = tangency_check(f, z_zero, derive_seed(seed, 1), 8);
    report.checks["tangency"] = ok;
    if (!ok) throw DecompositionError("tangency", "a fiber basis vector leaves Z");

    // (b) off Z the fiber splits as the az directions plus the eta fiber
    std::vector<size_t> eta_pos = eta_positions(d_sorted, n);
    size_t tried = 0, used = 0;
    ok = true;
    while (used < 8 && tried < 200 && ok) {
        Point x = sample_point(n, derive_seed(seed, 100 + tried));
        ++tried;
        bool on_z = true;
        for (size_t j : z_zero)
            if (!x[j].is_zero()) {
                on_z = false;
                break;
            }
        if (on_z) continue; // need points off the singular set
        ++used;
        size_t dim_f = tangent_fiber(f, x).dim;
        size_t dim_eta = tangent_fiber(report.eta, project_point(x, d_sorted)).dim;
        if (dim_f != s + dim_eta) {
            ok = false;
            break;
        }
        std::vector<std::vector<GaussianRational>> values;
        values.reserve(f.generators().size());
        for (const auto& g : f.generators()) values.push_back(vf_eval(g, x));
        for (size_t j : az_sorted) {
            std::vector<GaussianRational> e(n);
            e[j] = GaussianRational(1);
            if (!in_span(e, values)) {
                ok = false;
                break;
            }
        }
    }
    if (used < 8) ok = false; // could not find enough off-Z sample points
    report.checks["fiber_split"] = ok;
    if (!ok) throw DecompositionError("fiber_split", "fiber does not split off the az directions");

    // (c) the reduced foliation has generic rank k-s
    ok = generic_rank(report.eta, derive_seed(seed, 2)) == k - s;
    report.checks["eta_rank"] = ok;
    if (!ok) throw DecompositionError("eta_rank", "reduced foliation misses rank k-s");

    // (d) eta's fiber vanishes along its singular set (the image of Z)
    std::vector<size_t> eta_z_zero;
    for (size_t j : z_zero) eta_z_zero.push_back(eta_pos[j]);
    ok = true;
    for (const Point& x : points_for(n - s, derive_seed(seed, 3), 8, eta_z_zero))
        if (tangent_fiber(report.eta, x).dim != 0) {
            ok = false;
            break;
        }
    report.checks["eta_singular_rank_zero"] = ok;
    if (!ok)
        throw DecompositionError("eta_singular_rank_zero",
                                 "reduced fiber does not vanish along the singular set");
    return report;
}

SplitVerdict split_check(const DecompositionReport& report, const Foliation& f, uint64_t seed) {
    (void)f;
    const FoliationProfile& pr = report.profile;
    SplitVerdict v;
    if (pr.n - pr.r <= pr.k - pr.s) {
        v.split = false;
        v.detail = "dimension obstruction: n-r <= k-s";
        return v;
    }

    // Positions of the bz coordinates inside eta's variables.
    std::vector<size_t> eta_bz;
    {
        std::vector<size_t> pos(pr.n, SIZE_MAX);
        for (size_t t = 0; t < report.d_indices.size(); ++t) pos[report.d_indices[t]] = t;
        for (size_t j : report.bz_indices) eta_bz.push_back(pos[j]);
    }

    // Parallel slices require the generators to be constant across bz:
    // identically zero components along every bz direction.
    for (const auto& g : report.eta.generators())
        for (size_t j : eta_bz)
            if (!g.components[j].is_zero()) {
                v.split = false;
                v.detail = "a generator moves along a bz direction";
                return v;
            }

    // Transversality with the cross-slice K = {z-coordinates = 0}: at
    // sampled K-points the fiber meets T(K) in dimension exactly k-s.
    size_t n_eta = pr.n - pr.s;
    size_t dim_k = pr.n - pr.r;
    std::vector<std::vector<GaussianRational>> k_basis;
    {
        std::vector<bool> in_bz(n_eta, false);
        for (size_t j : eta_bz) in_bz[j] = true;
        for (size_t j = 0; j < n_eta; ++j) {
            if (in_bz[j]) continue;
            std::vector<GaussianRational> e(n_eta);
            e[j] = GaussianRational(1);
            k_basis.push_back(std::move(e));
        }
    }
    for (const Point& x : points_for(n_eta, derive_seed(seed, 7), 8, eta_bz)) {
        TangentFiber fiber = tangent_fiber(report.eta, x);
        std::vector<std::vector<GaussianRational>> joint = fiber.basis;
        joint.insert(joint.end(), k_basis.begin(), k_basis.end());
        size_t dim_sum = matrix_rank(ExactMatrix::from_rows(joint));
        size_t dim_meet = fiber.dim + dim_k - dim_sum;
        if (dim_meet != pr.k - pr.s) {
            v.split = false;
            v.detail = "fiber does not meet the cross-slice transversally";
            return v;
        }
    }
    v.split = true;
    v.alpha_profile = FoliationProfile(pr.n - pr.r, pr.k - pr.s, 0, 0);
    v.detail = "slice foliation realizes " + v.alpha_profile->str();
    return v;
}

bool malgrange_check(size_t n, size_t k, size_t r) {
    if (!(n > k && k > r)) throw ProfileError("bound requires n > k > r");
    return r + k + 1 >= n;
}

Foliation product_extend(const Foliation& f, size_t m) {
    size_t n = f.nvars();
    std::vector<size_t> var_map(n);
    for (size_t j = 0; j < n; ++j) var_map[j] = j;
    std::vector<VectorField> gens;
    gens.reserve(f.generators().size() + m);
    for (const auto& g : f.generators()) {
        std::vector<Polynomial> comps;
        comps.reserve(n + m);
        for (const auto& c : g.components) comps.push_back(c.embed(n + m, var_map));
        for (size_t j = 0; j < m; ++j) comps.push_back(Polynomial::zero(n + m));
        gens.push_back(VectorField(std::move(comps)));
    }
    for (size_t j = 0; j < m; ++j) gens.push_back(VectorField::coordinate(n + m, n + j));
    std::optional<size_t> rank;
    if (f.declared_rank()) rank = *f.declared_rank() + m;
    return Foliation::from_generators(n + m, std::move(gens), rank);
}

Foliation slice_extend(const Foliation& f, size_t m) {
    size_t n = f.nvars();
    std::vector<size_t> var_map(n);
    for (size_t j = 0; j < n; ++j) var_map[j] = j;
    if (f.kind() == PresentationKind::LevelSets) {
        std::vector<Polynomial> levels;
        levels.reserve(f.level_sets().size() + m);
        for (const auto& p : f.level_sets()) levels.push_back(p.embed(n + m, var_map));
        for (size_t j = 0; j < m; ++j) levels.push_back(Polynomial::variable(n + m, n + j));
        return Foliation::from_level_sets(n + m, std::move(levels), f.declared_rank());
    }
    std::vector<VectorField> gens;
    gens.reserve(f.generators().size());
    for (const auto& g : f.generators()) {
        std::vector<Polynomial> comps;
        comps.reserve(n + m);
        for (const auto& c : g.components) comps.push_back(c.embed(n + m, var_map));
        for (size_t j = 0; j < m; ++j) comps.push_back(Polynomial::zero(n + m));
        gens.push_back(VectorField(std::move(comps)));
    }
    return Foliation::from_generators(n + m, std::move(gens), f.declared_rank());
}

} // namespace fol
