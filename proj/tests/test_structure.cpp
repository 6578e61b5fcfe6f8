#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fol/errors.hpp"
#include "fol/families.hpp"
#include "fol/sampling.hpp"
#include "fol/structure.hpp"
#include "test_util.hpp"

using namespace fol;
using fol::testutil::pt;

namespace {

VectorField rotation(size_t nvars, size_t a, size_t b) {
    std::vector<Polynomial> comps(nvars, Polynomial::zero(nvars));
    comps[b] = Polynomial::variable(nvars, a);
    comps[a] = -Polynomial::variable(nvars, b);
    return VectorField(std::move(comps));
}

VectorField monomial_field(size_t nvars, const Polynomial& coeff, size_t direction) {
    std::vector<Polynomial> comps(nvars, Polynomial::zero(nvars));
    comps[direction] = coeff;
    return VectorField(std::move(comps));
}

std::string thrown_check(const Foliation& f, const FoliationProfile& pr,
                         const CoordinateRoles& roles) {
    try {
        build_decomposition(f, pr, roles);
    } catch (const DecompositionError& e) {
        return e.check;
    }
    return "";
}

} // namespace

TEST_CASE("profile validation and printing") {
    FoliationProfile p(5, 3, 2, 1);
    CHECK(p.str() == "(5,3,2,1)");
    CHECK(p == FoliationProfile(5, 3, 2, 1));
    CHECK(p != FoliationProfile(5, 3, 2, 0));
    CHECK_THROWS_AS(FoliationProfile(3, 3, 1, 0), ProfileError);
    CHECK_THROWS_AS(FoliationProfile(4, 3, 3, 0), ProfileError);
    CHECK_THROWS_AS(FoliationProfile(5, 3, 1, 2), ProfileError);

    CoordinateRoles roles;
    roles.z = {3, 4};
    CHECK(roles.z_zero_indices(5) == std::vector<size_t>{0, 1, 2});
    CHECK(CoordinateRoles{}.z_zero_indices(3) == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("tangency along the singular locus") {
    FamilyInstance ex3 = example3(5, 3, 2);
    CHECK(tangency_check(ex3.foliation, ex3.roles.z_zero_indices(5), 0, 8));

    // all of Z collapses to the origin when r = 0: vacuously tangent
    FamilyInstance quad = example1_quadrics(4);
    CHECK(tangency_check(quad.foliation, quad.roles.z_zero_indices(4), 0, 8));

    // adding a constant field breaks tangency
    std::vector<VectorField> broken = ex3.foliation.generators();
    broken.push_back(VectorField::coordinate(5, 0));
    CHECK(!tangency_check(Foliation::from_generators(5, broken),
                          ex3.roles.z_zero_indices(5), 0, 8));
}

TEST_CASE("constant-field flow") {
    Point p = pt({4, -1, 7});
    CHECK(flow_constant_field({}, p, 0) == p);

    std::vector<GaussianRational> t = {GaussianRational(2), GaussianRational(mpq_class(1, 3))};
    Point moved = flow_constant_field(t, Point::zero(4), 2);
    CHECK(moved[0] == GaussianRational(2));
    CHECK(moved[1] == GaussianRational(mpq_class(1, 3)));
    CHECK(moved[2].is_zero());
    CHECK(moved[3].is_zero());

    // one-parameter group law, exact
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<GaussianRational> a, b, sum;
        for (int j = 0; j < 2; ++j) {
            a.push_back(fol::testutil::random_rational(rng));
            b.push_back(fol::testutil::random_rational(rng));
            sum.push_back(a.back() + b.back());
        }
        Point x = sample_point(5, derive_seed(3, trial));
        CHECK(flow_constant_field(a, flow_constant_field(b, x, 2), 2) ==
              flow_constant_field(sum, x, 2));
    }

    CHECK_THROWS_AS(flow_constant_field(t, Point::zero(4), 1), DimensionError);
    CHECK_THROWS_AS(flow_constant_field(t, Point::zero(1), 2), DimensionError);
}

TEST_CASE("decomposition of the general family") {
    FamilyInstance fam = example3(5, 3, 2);
    DecompositionReport rep =
        build_decomposition(fam.foliation, fam.expected_profile, fam.roles);
    CHECK(rep.profile == FoliationProfile(5, 3, 2, 1));
    CHECK(rep.eta_profile == FoliationProfile(4, 2, 1, 0));
    CHECK(rep.az_indices == std::vector<size_t>{4});
    CHECK(rep.bz_indices == std::vector<size_t>{3});
    CHECK(rep.d_indices == std::vector<size_t>{0, 1, 2, 3});
    CHECK(rep.eta.nvars() == 4);
    CHECK(generic_rank(rep.eta, 0) == 2);
    for (const char* name :
         {"tangency", "fiber_split", "eta_rank", "eta_singular_rank_zero"}) {
        REQUIRE(rep.checks.count(name) == 1);
        CHECK(rep.checks.at(name));
    }
}

TEST_CASE("reduction is the identity when s = 0") {
    FamilyInstance fam = example2(5);
    DecompositionReport rep =
        build_decomposition(fam.foliation, fam.expected_profile, fam.roles);
    CHECK(rep.eta_profile == fam.expected_profile);
    CHECK(rep.eta.nvars() == 5);
    for (size_t t = 0; t < 20; ++t) {
        Point x = sample_point(5, derive_seed(21, t));
        CHECK(tangent_fiber(rep.eta, x).dim == tangent_fiber(fam.foliation, x).dim);
    }
}

TEST_CASE("decomposition failures name the offending check") {
    FamilyInstance fam = example3(5, 3, 2);

    // roles that point the singular locus at the wrong coordinates
    CoordinateRoles wrong;
    wrong.z = {0, 1};
    wrong.az = {1};
    wrong.bz = {0};
    wrong.d = {0, 2, 3, 4};
    CHECK(thrown_check(fam.foliation, fam.expected_profile, wrong) == "tangency");

    // a rank-deficient input cannot split off the az direction
    Foliation thin = Foliation::from_generators(3, {rotation(3, 0, 1)});
    CoordinateRoles r311;
    r311.z = {2};
    r311.az = {2};
    r311.d = {0, 1};
    CHECK(thrown_check(thin, FoliationProfile(3, 2, 1, 1), r311) == "fiber_split");

    // reduced rank mismatch
    Foliation fat = Foliation::from_generators(
        3, {VectorField::coordinate(3, 2), rotation(3, 0, 1),
            monomial_field(3, Polynomial::variable(3, 0), 0)});
    CHECK(thrown_check(fat, FoliationProfile(3, 2, 1, 1), r311) == "eta_rank");

    // nothing survives the restriction
    Foliation vertical = Foliation::from_generators(3, {VectorField::coordinate(3, 2)});
    CHECK(thrown_check(vertical, FoliationProfile(3, 2, 1, 1), r311) == "eta_rank");

    // reduced fiber alive along the singular image
    Foliation alive = Foliation::from_generators(
        4, {VectorField::coordinate(4, 3), rotation(4, 0, 1),
            monomial_field(4, Polynomial::variable(4, 2), 2)});
    CoordinateRoles r421;
    r421.z = {2, 3};
    r421.az = {3};
    r421.bz = {2};
    r421.d = {0, 1, 2};
    CHECK(thrown_check(alive, FoliationProfile(4, 3, 2, 1), r421) ==
          "eta_singular_rank_zero");

    // malformed roles are rejected before any sampling
    CoordinateRoles bad = fam.roles;
    bad.z = {4};
    CHECK_THROWS_AS(build_decomposition(fam.foliation, fam.expected_profile, bad),
                    ProfileError);
    bad = fam.roles;
    bad.az = {0};
    CHECK_THROWS_AS(build_decomposition(fam.foliation, fam.expected_profile, bad),
                    ProfileError);
    bad = fam.roles;
    bad.d = {0, 1, 2, 4};
    CHECK_THROWS_AS(build_decomposition(fam.foliation, fam.expected_profile, bad),
                    ProfileError);
}

TEST_CASE("split verdicts") {
    // the cylinder family splits with the expected witness
    FamilyInstance ex2 = example2(5);
    DecompositionReport rep2 =
        build_decomposition(ex2.foliation, ex2.expected_profile, ex2.roles);
    SplitVerdict v2 = split_check(rep2, ex2.foliation, 0);
    CHECK(v2.split);
    REQUIRE(v2.alpha_profile.has_value());
    CHECK(*v2.alpha_profile == FoliationProfile(4, 3, 0, 0));
    CHECK(*v2.alpha_profile == *ex2.expected_alpha_profile);

    // so does the general family
    for (auto [n, k, r] : {std::tuple<size_t, size_t, size_t>{5, 3, 2}, {6, 4, 2}, {7, 5, 3}}) {
        FamilyInstance fam = example3(n, k, r);
        DecompositionReport rep =
            build_decomposition(fam.foliation, fam.expected_profile, fam.roles);
        SplitVerdict v = split_check(rep, fam.foliation, 0);
        CHECK(v.split);
        REQUIRE(v.alpha_profile.has_value());
        CHECK(*v.alpha_profile == *fam.expected_alpha_profile);
    }

    // dimension obstruction short-circuits: rank fills the cross-slice
    Foliation bundle = Foliation::from_generators(
        4, {rotation(4, 0, 1), rotation(4, 0, 2), rotation(4, 1, 2),
            VectorField({Polynomial::variable(4, 0), Polynomial::variable(4, 1),
                         Polynomial::variable(4, 2), Polynomial::zero(4)})});
    CoordinateRoles rb;
    rb.z = {3};
    rb.bz = {3};
    rb.d = {0, 1, 2, 3};
    DecompositionReport repb = build_decomposition(bundle, FoliationProfile(4, 3, 1, 0), rb);
    SplitVerdict vb = split_check(repb, bundle, 0);
    CHECK(!vb.split);
    CHECK(!vb.alpha_profile.has_value());
    CHECK(vb.detail.find("n-r <= k-s") != std::string::npos);

    // a generator drifting along bz blocks the parallel-slice picture
    Foliation drift = Foliation::from_generators(
        4, {rotation(4, 0, 1), monomial_field(4, Polynomial::variable(4, 0), 3)});
    DecompositionReport repd = build_decomposition(drift, FoliationProfile(4, 2, 1, 0), rb);
    SplitVerdict vd = split_check(repd, drift, 0);
    CHECK(!vd.split);
    CHECK(vd.detail.find("bz") != std::string::npos);

    // fibers collapsing over the cross-slice break transversality
    Polynomial x1x5 = Polynomial::variable(5, 0) * Polynomial::variable(5, 4);
    Foliation collapse = Foliation::from_generators(
        5, {rotation(5, 0, 1), rotation(5, 0, 2), rotation(5, 1, 2),
            monomial_field(5, x1x5, 0)});
    CoordinateRoles rc;
    rc.z = {4};
    rc.bz = {4};
    rc.d = {0, 1, 2, 3, 4};
    DecompositionReport repc = build_decomposition(collapse, FoliationProfile(5, 3, 1, 0), rc);
    SplitVerdict vc = split_check(repc, collapse, 0);
    CHECK(!vc.split);
    CHECK(vc.detail.find("transversally") != std::string::npos);
}

TEST_CASE("dimension bound") {
    CHECK(malgrange_check(5, 3, 1));
    CHECK(!malgrange_check(6, 3, 1));
    for (size_t n = 2; n <= 9; ++n) CHECK(malgrange_check(n, n - 1, 0));
    // monotone in r once it holds
    for (size_t r = 2; r < 5; ++r) CHECK(malgrange_check(8, 5, r) == (r >= 2));
    CHECK(!malgrange_check(8, 5, 1));
    CHECK_THROWS_AS(malgrange_check(3, 3, 1), ProfileError);
    CHECK_THROWS_AS(malgrange_check(4, 2, 2), ProfileError);
}

TEST_CASE("product extension") {
    FamilyInstance quad = example1_quadrics(3);
    Foliation prod = product_extend(quad.foliation, 2);
    CHECK(prod.nvars() == 5);
    CHECK(generic_rank(prod, 0) == 4); // declared rank propagated and re-checked

    // fibers shift by exactly m everywhere, including over the singular set
    for (size_t t = 0; t < 20; ++t) {
        Point y = sample_point(5, derive_seed(31, t));
        Point x = Point::zero(3);
        for (size_t j = 0; j < 3; ++j) x[j] = y[j];
        CHECK(tangent_fiber(prod, y).dim == tangent_fiber(quad.foliation, x).dim + 2);
    }
    Point over_origin = pt({0, 0, 0, 9, -4});
    CHECK(tangent_fiber(prod, over_origin).dim == 2);

    // level-set inputs extend through their materialized generators
    REQUIRE(quad.by_level_sets.has_value());
    Foliation prod2 = product_extend(*quad.by_level_sets, 1);
    CHECK(prod2.nvars() == 4);
    CHECK(generic_rank(prod2, 0) == 3);
}

TEST_CASE("slice extension") {
    FamilyInstance quad = example1_quadrics(4);
    FamilyInstance ex2 = example2(5);

    // rank is unchanged and the singular set fattens
    Foliation sliced = slice_extend(quad.foliation, 1);
    CHECK(sliced.nvars() == 5);
    CHECK(generic_rank(sliced, 0) == 3);
    CHECK(tangent_fiber(sliced, pt({0, 0, 0, 0, 7})).dim == 0);

    // slicing the quadric family reproduces the cylinder family
    for (size_t t = 0; t < 30; ++t) {
        Point x = sample_point(5, derive_seed(17, t));
        CHECK(tangent_fiber(sliced, x).dim == tangent_fiber(ex2.foliation, x).dim);
    }
    REQUIRE(quad.by_level_sets.has_value());
    REQUIRE(ex2.by_level_sets.has_value());
    Foliation sliced_levels = slice_extend(*quad.by_level_sets, 1);
    REQUIRE(sliced_levels.level_sets().size() == 2);
    CHECK(sliced_levels.level_sets()[0] == ex2.by_level_sets->level_sets()[0]);
    CHECK(sliced_levels.level_sets()[1] == ex2.by_level_sets->level_sets()[1]);
}
