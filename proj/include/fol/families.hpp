#ifndef FOL_FAMILIES_HPP
#define FOL_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "fol/foliation.hpp"
#include "fol/structure.hpp"

namespace fol {

// A built-in example foliation together with its closed-form expected data:
// profile, coordinate roles, and the reduced/slice profiles its
// decomposition should realize. `foliation` carries the explicit generator
// presentation; `by_level_sets` the defining-polynomial presentation where
// one exists (the line family has none).
struct FamilyInstance {
    std::string name;
    Foliation foliation;
    std::optional<Foliation> by_level_sets;
    FoliationProfile expected_profile;
    CoordinateRoles roles;
    std::vector<size_t> k_role; // cross-slice K, complement of the z span
    std::optional<FoliationProfile> expected_eta_profile;
    std::optional<FoliationProfile> expected_alpha_profile;

    explicit FamilyInstance(Foliation f) : foliation(std::move(f)) {}
};

// Lines through the origin: single Euler generator, profile (n,1,0,0).
FamilyInstance example1_lines(size_t n);

// Concentric quadric hypersurfaces: rotation generators, profile (n,n-1,0,0).
FamilyInstance example1_quadrics(size_t n);

// Quadrics in the first n-1 coordinates crossed with the last coordinate
// held fixed: profile (n, n-2, 1, 0), singular along the last axis, split.
FamilyInstance example2(size_t n);

// The general construction: quadric in the first n-r coordinates, the next
// n-k-1 coordinates fixed, the last k+r+1-n directions free. Profile
// (n, k, r, k+r+1-n); requires n > k > r >= 0 and r >= n-k-1.
FamilyInstance example3(size_t n, size_t k, size_t r);

} // namespace fol

#endif
