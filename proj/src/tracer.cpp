#include "fol/tracer.hpp"

#include <algorithm>
#include <cmath>

#include "fol/errors.hpp"

namespace fol {

std::complex<double> numeric_eval(const Polynomial& p,
                                  const std::vector<std::complex<double>>& z) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : p.terms()) {
        std::complex<double> term = c.to_complex();
        for (size_t j = 0; j < e.size(); ++j)
            for (uint32_t t = 0; t < e[j]; ++t) term *= z[j];
        acc += term;
    }
    return acc;
}

namespace {

using CVec = std::vector<std::complex<double>>;

CVec field_at(const VectorField& v, const CVec& z, std::complex<double> scale) {
    CVec out(z.size());
    for (size_t j = 0; j < z.size(); ++j) out[j] = scale * numeric_eval(v.components[j], z);
    return out;
}

CVec axpy(const CVec& z, double h, const CVec& k) {
    CVec out(z.size());
    for (size_t j = 0; j < z.size(); ++j) out[j] = z[j] + h * k[j];
    return out;
}

std::vector<CVec> integrate(const VectorField& v, const CVec& start, std::complex<double> scale,
                            size_t steps, double h) {
    std::vector<CVec> pts;
    pts.reserve(steps + 1);
    pts.push_back(start);
    CVec z = start;
    for (size_t t = 0; t < steps; ++t) {
        CVec k1 = field_at(v, z, scale);
        CVec k2 = field_at(v, axpy(z, h / 2, k1), scale);
        CVec k3 = field_at(v, axpy(z, h / 2, k2), scale);
        CVec k4 = field_at(v, axpy(z, h, k3), scale);
        for (size_t j = 0; j < z.size(); ++j)
            z[j] += (h / 6) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        pts.push_back(z);
    }
    return pts;
}

double drift_of(const std::vector<Polynomial>& integrals, const std::vector<CVec>& pts) {
    double worst = 0.0;
    for (const auto& F : integrals) {
        std::complex<double> f0 = numeric_eval(F, pts.front());
        double scale = 1.0 + std::abs(f0);
        for (const auto& z : pts) worst = std::max(worst, std::abs(numeric_eval(F, z) - f0) / scale);
    }
    return worst;
}

} // namespace

TraceRecord trace_leaf(const Foliation& f, const CVec& start, size_t generator_index,
                       double theta, double total_time, double step) {
    if (f.kind() != PresentationKind::LevelSets)
        throw UnsupportedPresentationError("tracing needs a level-set presentation");
    if (start.size() != f.nvars())
        throw DimensionError("start point dimension differs from ambient dimension");
    if (generator_index >= f.generators().size())
        throw DimensionError("generator index out of range");
    if (step <= 0) throw Error("step must be positive");
    if (total_time < 0) throw Error("total time must be non-negative");

    // Refuse singular starts: the exact image of the numeric start (every
    // double is a dyadic rational) must carry a full-rank fiber.
    Point exact = Point::zero(f.nvars());
    for (size_t j = 0; j < f.nvars(); ++j) exact[j] = GaussianRational::from_complex(start[j]);
    size_t k = f.declared_rank() ? *f.declared_rank() : generic_rank(f, 0);
    size_t dim = tangent_fiber(f, exact).dim;
    if (dim < k)
        throw SingularStartError("start point is singular: fiber rank " + std::to_string(dim) +
                                 " < " + std::to_string(k));

    const VectorField& v = f.generators()[generator_index];
    std::complex<double> scale = std::polar(1.0, theta);

    TraceRecord rec;
    rec.direction_angle = theta;
    if (total_time == 0) {
        rec.points.push_back(start);
        rec.step = step;
        rec.drift = 0;
        rec.halved_step_drift = 0;
        return rec;
    }

    size_t steps = static_cast<size_t>(std::max<long long>(1, std::llround(total_time / step)));
    double h = total_time / static_cast<double>(steps);
    rec.points = integrate(v, start, scale, steps, h);
    rec.step = h;
    rec.drift = drift_of(f.level_sets(), rec.points);
    rec.halved_step_drift =
        drift_of(f.level_sets(), integrate(v, start, scale, 2 * steps, h / 2));
    return rec;
}

} // namespace fol
