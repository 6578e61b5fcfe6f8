#ifndef FOL_FOLIATION_HPP
#define FOL_FOLIATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fol/polynomial.hpp"
#include "fol/rational.hpp"
#include "fol/vector_field.hpp"

namespace fol {

enum class PresentationKind { Generators, LevelSets };

// Analysis result at one point: the exact tangent-fiber dimension, whether
// the point is singular for the foliation, and the depth of the stratum
// { x : dim T_x <= k - i } it belongs to (0 at nonsingular points).
struct StratumReport {
    Point point;
    size_t fiber_dim = 0;
    size_t stratum_index = 0;
    bool singular = false;
};

// A foliation presented either by generating vector fields or by the level
// sets of a polynomial submersion (fields tangent to the fibers). Level-set
// presentations materialize a generator basis eagerly, so pointwise analysis
// is uniform across both presentations.
class Foliation {
  public:
    static Foliation from_generators(size_t nvars, std::vector<VectorField> gens,
                                     std::optional<size_t> declared_rank = std::nullopt);
    static Foliation from_level_sets(size_t nvars, std::vector<Polynomial> levels,
                                     std::optional<size_t> declared_rank = std::nullopt);

    size_t nvars() const { return nvars_; }
    PresentationKind kind() const { return kind_; }
    const std::vector<VectorField>& generators() const { return generators_; }
    const std::vector<Polynomial>& level_sets() const { return level_sets_; }
    std::optional<size_t> declared_rank() const { return declared_rank_; }

  private:
    Foliation() = default;

    size_t nvars_ = 0;
    PresentationKind kind_ = PresentationKind::Generators;
    std::vector<VectorField> generators_; // materialized for both presentations
    std::vector<Polynomial> level_sets_;  // empty for Generators presentations
    std::optional<size_t> declared_rank_;
};

struct TangentFiber {
    std::vector<std::vector<GaussianRational>> basis; // maximal independent subset
    size_t dim = 0;
};

// Exact span of the evaluated generators at x; basis rows keep generator
// input order (greedy rank-increasing selection).
TangentFiber tangent_fiber(const Foliation& f, const Point& x);

// Maximum fiber dimension over 8 deterministic sample points. When a
// declared rank is present it must match the sampled maximum (contradiction
// error otherwise). Rank 0 is rejected: every foliation here has rank >= 1.
size_t generic_rank(const Foliation& f, uint64_t seed);

// dim T_x < generic rank?
bool is_singular(const Foliation& f, const Point& x, uint64_t seed = 0);

StratumReport stratum_report(const Foliation& f, const Point& x, uint64_t seed = 0);

// All m x m minors of the Jacobian of the m level-set polynomials, in
// lexicographic column-subset order; their common zero set is the singular
// set. Level-set presentations only.
std::vector<Polynomial> singular_equations(const Foliation& f);

// Pointwise necessary condition for involutivity: every pairwise bracket,
// evaluated at `trials` sampled points, lies in the span of the evaluated
// generators there. Not a symbolic module-membership proof.
bool involutivity_check(const Foliation& f, uint64_t seed, size_t trials);

// vf_apply(V, F) == 0 exactly for every generator/level-set pair.
bool annihilation_check(const std::vector<VectorField>& gens,
                        const std::vector<Polynomial>& levels);

} // namespace fol

#endif
