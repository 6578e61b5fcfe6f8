#include "fol/families.hpp"

#include "fol/errors.hpp"

namespace fol {

namespace {

// X_a d/dX_b - X_b d/dX_a: infinitesimal rotation in the (a,b) plane.
VectorField rotation(size_t nvars, size_t a, size_t b) {
    std::vector<Polynomial> comps(nvars, Polynomial::zero(nvars));
    comps[b] = Polynomial::variable(nvars, a);
    comps[a] = -Polynomial::variable(nvars, b);
    return VectorField(std::move(comps));
}

// All rotations among the first m coordinates of C^nvars, lexicographic.
std::vector<VectorField> rotations(size_t nvars, size_t m) {
    std::vector<VectorField> out;
    for (size_t a = 0; a + 1 < m; ++a)
        for (size_t b = a + 1; b < m; ++b) out.push_back(rotation(nvars, a, b));
    return out;
}

// X_1^2 + ... + X_m^2 in nvars variables.
Polynomial quadric(size_t nvars, size_t m) {
    Polynomial q = Polynomial::zero(nvars);
    for (size_t j = 0; j < m; ++j) {
        Exponents e(nvars, 0);
        e[j] = 2;
        q += Polynomial::monomial(nvars, e, GaussianRational(1));
    }
    return q;
}

std::vector<size_t> range(size_t lo, size_t hi) { // [lo, hi)
    std::vector<size_t> out;
    for (size_t j = lo; j < hi; ++j) out.push_back(j);
    return out;
}

} // namespace

FamilyInstance example1_lines(size_t n) {
    if (n < 2) throw ProfileError("line family needs n >= 2");
    // Euler field: X_1 d/dX_1 + ... + X_n d/dX_n.
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (size_t j = 0; j < n; ++j) comps.push_back(Polynomial::variable(n, j));
    FamilyInstance inst(
        Foliation::from_generators(n, {VectorField(std::move(comps))}, 1));
    inst.name = "example1-lines(" + std::to_string(n) + ")";
    inst.expected_profile = FoliationProfile(n, 1, 0, 0);
    inst.roles.d = range(0, n);
    inst.k_role = range(0, n);
    inst.expected_eta_profile = inst.expected_profile; // s = 0: identity reduction
    inst.expected_alpha_profile = FoliationProfile(n, 1, 0, 0);
    return inst;
}

FamilyInstance example1_quadrics(size_t n) {
    if (n < 2) throw ProfileError("quadric family needs n >= 2");
    FamilyInstance inst(Foliation::from_generators(n, rotations(n, n), n - 1));
    inst.name = "example1-quadrics(" + std::to_string(n) + ")";
    inst.by_level_sets = Foliation::from_level_sets(n, {quadric(n, n)}, n - 1);
    inst.expected_profile = FoliationProfile(n, n - 1, 0, 0);
    inst.roles.d = range(0, n);
    inst.k_role = range(0, n);
    inst.expected_eta_profile = inst.expected_profile;
    inst.expected_alpha_profile = FoliationProfile(n, n - 1, 0, 0);
    return inst;
}

FamilyInstance example2(size_t n) {
    // n = 3 would give the profile (3,1,1,0) with k == r, outside the
    // admissible ordering n > k > r.
    if (n < 4) throw ProfileError("cylinder family needs n >= 4");
    FamilyInstance inst(Foliation::from_generators(n, rotations(n, n - 1), n - 2));
    inst.name = "example2(" + std::to_string(n) + ")";
    inst.by_level_sets = Foliation::from_level_sets(
        n, {quadric(n, n - 1), Polynomial::variable(n, n - 1)}, n - 2);
    inst.expected_profile = FoliationProfile(n, n - 2, 1, 0);
    inst.roles.z = {n - 1};
    inst.roles.bz = {n - 1};
    inst.roles.d = range(0, n);
    inst.k_role = range(0, n - 1);
    inst.expected_eta_profile = inst.expected_profile;
    inst.expected_alpha_profile = FoliationProfile(n - 1, n - 2, 0, 0);
    return inst;
}

FamilyInstance example3(size_t n, size_t k, size_t r) {
    if (!(n > k && k > r)) throw ProfileError("family needs n > k > r >= 0");
    if (!malgrange_check(n, k, r))
        throw ProfileError("family needs r >= n-k-1, got r = " + std::to_string(r) +
                           ", n-k-1 = " + std::to_string(n - k - 1));
    const size_t s = k + r + 1 - n;
    // Defining system: quadric in the first n-r coordinates, then the
    // coordinates n-r .. 2n-k-r-2 (0-based) each fixed. The remaining s
    // directions are free, so the fiber gains s constant fields.
    std::vector<Polynomial> levels;
    levels.push_back(quadric(n, n - r));
    for (size_t j = n - r; j + s < n; ++j) levels.push_back(Polynomial::variable(n, j));

    std::vector<VectorField> gens = rotations(n, n - r);
    for (size_t j = n - s; j < n; ++j) gens.push_back(VectorField::coordinate(n, j));

    FamilyInstance inst(Foliation::from_generators(n, std::move(gens), k));
    inst.name = "example3(" + std::to_string(n) + "," + std::to_string(k) + "," +
                std::to_string(r) + ")";
    inst.by_level_sets = Foliation::from_level_sets(n, std::move(levels), k);
    inst.expected_profile = FoliationProfile(n, k, r, s);
    inst.roles.z = range(n - r, n);
    inst.roles.az = range(n - s, n);
    inst.roles.bz = range(n - r, n - s);
    inst.roles.d = range(0, n - s);
    inst.k_role = range(0, n - r);
    inst.expected_eta_profile = FoliationProfile(n - s, k - s, r - s, 0);
    inst.expected_alpha_profile = FoliationProfile(n - r, n - r - 1, 0, 0);
    return inst;
}

} // namespace fol
