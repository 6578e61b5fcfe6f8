#include "fol/batch.hpp"

namespace fol {

std::vector<size_t> batch_fiber_dims_serial(const Foliation& f, const std::vector<Point>& pts) {
    std::vector<size_t> dims(pts.size());
    for (size_t t = 0; t < pts.size(); ++t) dims[t] = tangent_fiber(f, pts[t]).dim;
    return dims;
}

std::vector<size_t> batch_fiber_dims(const Foliation& f, const std::vector<Point>& pts) {
    std::vector<size_t> dims(pts.size());
    // Each iteration builds its own arbitrary-precision values; the shared
    // foliation is only read. GMP is safe under concurrent reads of
    // distinct destination objects.
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < static_cast<long>(pts.size()); ++t)
        dims[t] = tangent_fiber(f, pts[t]).dim;
    return dims;
}

std::vector<StratumReport> batch_stratum_reports_serial(const Foliation& f,
                                                        const std::vector<Point>& pts,
                                                        uint64_t seed) {
    size_t k = generic_rank(f, seed);
    std::vector<StratumReport> out(pts.size());
    for (size_t t = 0; t < pts.size(); ++t) {
        StratumReport& r = out[t];
        r.point = pts[t];
        r.fiber_dim = tangent_fiber(f, pts[t]).dim;
        r.singular = r.fiber_dim < k;
        r.stratum_index = r.singular ? k - r.fiber_dim : 0;
    }
    return out;
}

std::vector<StratumReport> batch_stratum_reports(const Foliation& f,
                                                 const std::vector<Point>& pts,
                                                 uint64_t seed) {
    size_t k = generic_rank(f, seed); // once, not per point
    std::vector<StratumReport> out(pts.size());
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < static_cast<long>(pts.size()); ++t) {
        StratumReport& r = out[t];
        r.point = pts[t];
        r.fiber_dim = tangent_fiber(f, pts[t]).dim;
        r.singular = r.fiber_dim < k;
        r.stratum_index = r.singular ? k - r.fiber_dim : 0;
    }
    return out;
}

} // namespace fol
