#ifndef FOL_TRACER_HPP
#define FOL_TRACER_HPP

#include <complex>
#include <vector>

#include "fol/foliation.hpp"

namespace fol {

// Numeric trajectory of one generator field, with conservation bookkeeping.
// drift is the worst relative deviation of any defining polynomial across
// the stored points: max over points t and integrals F_i of
// |F_i(z_t) - F_i(z_0)| / (1 + |F_i(z_0)|).
// halved_step_drift is the same quantity from an otherwise identical run at
// half the step, recorded as a convergence sanity datum.
struct TraceRecord {
    std::vector<std::vector<std::complex<double>>> points; // start first
    double step = 0;            // actual step used (total_time / step count)
    double direction_angle = 0; // theta of the complex-time ray
    double drift = 0;
    double halved_step_drift = 0;
};

// Integrate dz/dtau = e^{i*theta} * V(z) with the classical fixed-step
// 4th-order scheme over tau in [0, total_time], where V is the chosen
// generator. The foliation must carry a level-set presentation (the
// integrals measured) — its generators are derived from it. The start must
// be non-singular: its exact dyadic-rational image must have full fiber
// rank, else the trace is refused. total_time == 0 yields a single-point
// trace with drift 0.
TraceRecord trace_leaf(const Foliation& f, const std::vector<std::complex<double>>& start,
                       size_t generator_index, double theta, double total_time, double step);

// Evaluate a polynomial at a numeric point (used for drift and by tests).
std::complex<double> numeric_eval(const Polynomial& p,
                                  const std::vector<std::complex<double>>& z);

} // namespace fol

#endif
