#ifndef FOL_STRUCTURE_HPP
#define FOL_STRUCTURE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fol/foliation.hpp"

namespace fol {

// The four-index class of a foliation: ambient dimension n, generic rank k,
// singular-set dimension r, minimal fiber dimension s along the singular
// set. Only n > k > r >= s >= 0 is admitted.
struct FoliationProfile {
    size_t n = 0, k = 0, r = 0, s = 0;

    FoliationProfile() = default;
    FoliationProfile(size_t n_, size_t k_, size_t r_, size_t s_);

    friend bool operator==(const FoliationProfile& a, const FoliationProfile& b) {
        return a.n == b.n && a.k == b.k && a.r == b.r && a.s == b.s;
    }
    friend bool operator!=(const FoliationProfile& a, const FoliationProfile& b) {
        return !(a == b);
    }
    std::string str() const; // "(n,k,r,s)"
};

// Declared coordinate roles, 0-based:
//   z  — coordinates spanning the singular set Z (|z| = r); Z is the
//        subspace where all *other* coordinates vanish
//   az — the distinguished s coordinates of Z along which fibers stay
//        constant-rank (subset of z)
//   bz — z minus az (|bz| = r-s)
//   d  — complement of az (|d| = n-s), the slice carrying the reduced
//        foliation
// Inputs must declare roles; the checks then certify or refute them.
struct CoordinateRoles {
    std::vector<size_t> z, az, bz, d;

    // The coordinates that vanish on Z: complement of z in {0..n-1}.
    std::vector<size_t> z_zero_indices(size_t n) const;
};

struct SplitVerdict {
    bool split = false;
    std::optional<FoliationProfile> alpha_profile; // witness when split
    std::string detail;                            // human-readable reason
};

// Result of reducing a foliation across its constant-rank directions:
// eta lives on the d-coordinates (renumbered 0..n-s-1) and, when all
// checks pass, realizes the profile (n-s, k-s, r-s, 0).
struct DecompositionReport {
    explicit DecompositionReport(Foliation eta_) : eta(std::move(eta_)) {}

    FoliationProfile profile;
    std::vector<size_t> az_indices, bz_indices, d_indices;
    Foliation eta;
    FoliationProfile eta_profile;
    std::map<std::string, bool> checks; // tangency, fiber_split, eta_rank,
                                        // eta_singular_rank_zero
    std::optional<SplitVerdict> split;
};

// At `trials` sampled points of Z (the listed coordinates forced to zero),
// every tangent-fiber basis vector has exact zero entries at those
// coordinates — the fibers stay tangent to Z.
bool tangency_check(const Foliation& f, const std::vector<size_t>& z_zero_indices,
                    uint64_t seed, size_t trials);

// Unit-time flow of the constant field t_1 d/dX_1 + ... + t_s d/dX_s:
// exact translation of p by (t_1,...,t_s,0,...,0).
Point flow_constant_field(const std::vector<GaussianRational>& t, const Point& p, size_t s);

// Reduce f across the az directions and certify the declared roles:
//   tangency               — fibers along Z are tangent to Z
//   fiber_split            — off Z, dim T_x(f) == s + dim T_(eta) at the
//                            projected point, and the az coordinate
//                            directions lie in the fiber
//   eta_rank               — generic rank of eta equals k-s
//   eta_singular_rank_zero — eta's fiber vanishes on its singular set
// Throws DecompositionError naming the first failed check.
DecompositionReport build_decomposition(const Foliation& f, const FoliationProfile& profile,
                                        const CoordinateRoles& roles, uint64_t seed = 0);

// Is the reduced foliation a family of parallel slices over the bz
// directions? False immediately when n-r <= k-s (dimension obstruction).
// Otherwise true iff the eta-generators have identically zero components
// along the bz directions and, at sampled points of the cross-slice
// K = {z-coordinates = 0}, the fiber meets T(K) transversally in the
// expected dimension k-s. Witness: the slice foliation's profile
// (n-r, k-s, 0, 0).
SplitVerdict split_check(const DecompositionReport& report, const Foliation& f, uint64_t seed);

// Dimension bound for non-trivial classes: r >= n-k-1. Requires n > k > r.
bool malgrange_check(size_t n, size_t k, size_t r);

// f x C^m: zero-pad the generators into n+m variables and add the m new
// coordinate fields. Rank grows by m.
Foliation product_extend(const Foliation& f, size_t m);

// Union of parallel copies of f over C^m: zero-pad the generators only.
// Level-set presentations gain the m new coordinates as defining
// polynomials. Rank is unchanged; the singular set gains m dimensions.
Foliation slice_extend(const Foliation& f, size_t m);

} // namespace fol

#endif
