// Compares the serial and parallel multi-point kernels on the built-in
// families and reports wall-clock times and speedup. Results are asserted
// equal before timings are trusted.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "fol/batch.hpp"
#include "fol/families.hpp"
#include "fol/sampling.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace fol;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

void bench(const char* name, const Foliation& f, size_t points) {
    std::vector<Point> pts = points_for(f.nvars(), 1234, points);

    auto t0 = std::chrono::steady_clock::now();
    auto serial = batch_stratum_reports_serial(f, pts, 7);
    auto t1 = std::chrono::steady_clock::now();
    auto parallel = batch_stratum_reports(f, pts, 7);
    auto t2 = std::chrono::steady_clock::now();

    for (size_t i = 0; i < serial.size(); ++i) {
        if (serial[i].fiber_dim != parallel[i].fiber_dim ||
            serial[i].stratum_index != parallel[i].stratum_index ||
            serial[i].singular != parallel[i].singular) {
            std::fprintf(stderr, "%s: serial/parallel mismatch at point %zu\n", name, i);
            std::exit(1);
        }
    }

    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("%-28s %6zu pts   serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                name, points, ts * 1e3, tp * 1e3, tp > 0 ? ts / tp : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without parallel support)\n");
#endif
    bench("example1-quadrics(6)", example1_quadrics(6).foliation, 400);
    bench("example2(7)", example2(7).foliation, 400);
    bench("example3(8,6,3)", example3(8, 6, 3).foliation, 400);
    bench("example3(8,6,3) level-sets", *example3(8, 6, 3).by_level_sets, 400);
    return 0;
}
