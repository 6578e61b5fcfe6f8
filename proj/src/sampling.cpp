#include "fol/sampling.hpp"

#include <random>

namespace fol {

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    // splitmix64 finalizer over the combined value; bijective mixing keeps
    // distinct (seed, index) pairs from colliding in practice.
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Point sample_point(size_t nvars, uint64_t seed, const std::vector<size_t>& constraints) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> box(-1000, 1000);
    Point p = Point::zero(nvars);
    for (size_t k = 0; k < nvars; ++k) p[k] = GaussianRational(box(rng));
    for (size_t k : constraints)
        if (k < nvars) p[k] = GaussianRational(0);
    return p;
}

std::vector<Point> points_for(size_t nvars, uint64_t seed, size_t count,
                              const std::vector<size_t>& constraints) {
    std::vector<Point> out;
    out.reserve(count);
    for (size_t t = 0; t < count; ++t)
        out.push_back(sample_point(nvars, derive_seed(seed, t), constraints));
    return out;
}

} // namespace fol
