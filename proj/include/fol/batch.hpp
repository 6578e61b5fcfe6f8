#ifndef FOL_BATCH_HPP
#define FOL_BATCH_HPP

#include <cstdint>
#include <vector>

#include "fol/foliation.hpp"

namespace fol {

// Multi-point analysis kernels. Each kernel exists twice: a plain serial
// loop (the reference semantics) and a parallel variant that distributes
// points across threads when OpenMP is enabled. Results are bitwise
// identical — the per-point work is a pure function of immutable inputs —
// which the test suite asserts.

std::vector<size_t> batch_fiber_dims_serial(const Foliation& f, const std::vector<Point>& pts);
std::vector<size_t> batch_fiber_dims(const Foliation& f, const std::vector<Point>& pts);

std::vector<StratumReport> batch_stratum_reports_serial(const Foliation& f,
                                                        const std::vector<Point>& pts,
                                                        uint64_t seed);
std::vector<StratumReport> batch_stratum_reports(const Foliation& f,
                                                 const std::vector<Point>& pts,
                                                 uint64_t seed);

} // namespace fol

#endif
