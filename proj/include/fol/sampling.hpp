#ifndef FOL_SAMPLING_HPP
#define FOL_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "fol/rational.hpp"

namespace fol {

// Deterministic point with integer coordinates uniform in [-1000, 1000]
// (imaginary parts zero); coordinates listed in `constraints` are forced
// to exact zero after drawing, so constrained and unconstrained samples
// with the same seed agree on the free coordinates.
Point sample_point(size_t nvars, uint64_t seed,
                   const std::vector<size_t>& constraints = {});

// Stream of sub-seeds for multi-trial procedures: mixes (seed, index) into
// a new 64-bit value, so one caller seed drives any number of draws.
uint64_t derive_seed(uint64_t seed, uint64_t index);

// Convenience: `count` points derived from one seed.
std::vector<Point> points_for(size_t nvars, uint64_t seed, size_t count,
                              const std::vector<size_t>& constraints = {});

} // namespace fol

#endif
