// End-to-end acceptance checks. Prints one line per criterion and exits
// with the number of failures, so `ctest` treats any miss as a failed test.
// Comparisons are exact except where the quantity under test is the
// floating-point drift of the tracer.
#include <chrono>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fol/batch.hpp"
#include "fol/cli.hpp"
#include "fol/document.hpp"
#include "fol/errors.hpp"
#include "fol/families.hpp"
#include "fol/foliation.hpp"
#include "fol/polynomial.hpp"
#include "fol/sampling.hpp"
#include "fol/structure.hpp"
#include "fol/tracer.hpp"
#include "fol/vector_field.hpp"

using namespace fol;
using nlohmann::json;

namespace {

struct Triple {
    size_t n, k, r;
    size_t s() const { return k + r + 1 - n; }
};

// Admissible example-3 parameter grid: 3 <= n <= 8, n > k > r >= 0 within
// the dimension bound r >= n-k-1.
std::vector<Triple> grid_triples() {
    std::vector<Triple> out;
    for (size_t n = 3; n <= 8; ++n)
        for (size_t k = 1; k < n; ++k)
            for (size_t r = 0; r < k; ++r)
                if (r + k + 1 >= n) out.push_back({n, k, r});
    return out;
}

uint64_t triple_tag(const Triple& t) { return (t.n << 16) | (t.k << 8) | t.r; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

VectorField rotation(size_t nvars, size_t a, size_t b) {
    std::vector<Polynomial> comps(nvars, Polynomial::zero(nvars));
    comps[b] = Polynomial::variable(nvars, a);
    comps[a] = -Polynomial::variable(nvars, b);
    return VectorField(std::move(comps));
}

// --- criterion 1: grid sweep with exact rank, fiber, and role dimensions ---

bool criterion1(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    auto grid = grid_triples();
    if (grid.size() != 49) {
        detail = "grid enumeration changed size: " + std::to_string(grid.size());
        return false;
    }
    size_t bad = 0;
    for (const Triple& t : grid) {
        FamilyInstance inst = example3(t.n, t.k, t.r);
        bool ok = generic_rank(inst.foliation, 0) == t.k;
        ok = ok && inst.roles.az.size() == t.s();
        ok = ok && inst.roles.bz.size() == t.n - t.k - 1;
        ok = ok && inst.roles.d.size() == 2 * t.n - t.k - t.r - 1;
        std::vector<size_t> zz = inst.roles.z_zero_indices(t.n);
        for (const Point& x : points_for(t.n, derive_seed(11, triple_tag(t)), 10, zz))
            ok = ok && tangent_fiber(inst.foliation, x).dim == t.s();
        if (!ok) ++bad;
    }
    double secs = seconds_since(t0);
    detail = std::to_string(grid.size()) + " triples, " + std::to_string(grid.size() - bad) +
             " exact, " + fmt_secs(secs);
    return bad == 0 && secs < 30.0;
}

// --- criterion 2: decompose via the CLI, then rebuild the product -------

bool criterion2(std::string& detail) {
    size_t instances = 0, bad = 0;
    for (const Triple& t : grid_triples()) {
        if (t.s() == 0) continue;
        ++instances;
        FamilyInstance inst = example3(t.n, t.k, t.r);
        FoliationDocument doc = FoliationDocument::from_family(inst);
        // Decompose the generator presentation: it carries the full fiber
        // structure at every point, so the product comparison below is
        // exact even on thin loci where a kernel basis would degenerate.
        doc.presentation = "generators";
        std::string path = "/tmp/fol_acceptance_" + std::to_string(triple_tag(t)) + ".json";
        {
            std::ofstream os(path);
            os << doc.to_json().dump();
        }
        std::ostringstream out, err;
        int rc = cli::run({"decompose", path, "--seed", "5"}, out, err);
        std::remove(path.c_str());
        if (rc != 0) {
            ++bad;
            continue;
        }
        json rep = json::parse(out.str());
        json want = json::array({t.n - t.s(), t.k - t.s(), t.r - t.s(), 0});
        bool ok = rep.at("eta_profile") == want;

        // eta x C^s must reproduce the fibers of the original pointwise;
        // the az coordinates are the trailing block, so the product's
        // appended coordinates land in matching positions.
        Foliation eta = FoliationDocument::from_json(rep.at("eta")).build();
        Foliation ext = product_extend(eta, t.s());
        std::vector<Point> pts = points_for(t.n, derive_seed(77, triple_tag(t)), 100);
        ok = ok && batch_fiber_dims(inst.foliation, pts) == batch_fiber_dims(ext, pts);
        if (!ok) ++bad;
    }
    detail = std::to_string(instances) + " instances with s > 0, " +
             std::to_string(instances - bad) + " verified";
    return instances > 0 && bad == 0;
}

// --- criterion 3: split verdicts with the expected slice profile --------

bool criterion3(std::string& detail) {
    size_t checked = 0, bad = 0;

    // n = 3 is outside the cylinder family's admissible ordering; its
    // rejection is part of the verdict.
    bool n3_rejected = false;
    try {
        example2(3);
    } catch (const ProfileError&) {
        n3_rejected = true;
    }

    auto check_split = [&](const FamilyInstance& inst, uint64_t seed) {
        ++checked;
        DecompositionReport rep =
            build_decomposition(inst.foliation, inst.expected_profile, inst.roles, seed);
        SplitVerdict v = split_check(rep, inst.foliation, seed);
        size_t n = inst.expected_profile.n, r = inst.expected_profile.r;
        FoliationProfile alpha(n - r, n - r - 1, 0, 0);
        if (!(v.split && v.alpha_profile && *v.alpha_profile == alpha)) ++bad;
    };

    for (size_t n = 4; n <= 6; ++n) check_split(example2(n), 3);
    for (const Triple& t : grid_triples()) check_split(example3(t.n, t.k, t.r), 3);

    // Rank that already fills the cross-slice: refused on dimensions alone,
    // before any sampling.
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
    bool gate_ok = !vb.split && !vb.alpha_profile.has_value() &&
                   vb.detail.find("n-r <= k-s") != std::string::npos;

    detail = std::to_string(checked) + " split instances, " + std::to_string(checked - bad) +
             " verified; cylinder n=3 rejected: " + (n3_rejected ? "yes" : "no") +
             "; dimension gate refuses: " + (gate_ok ? "yes" : "no");
    return bad == 0 && n3_rejected && gate_ok;
}

// --- criterion 4: constant-field flow lands exactly on (t, 0, ..., 0) ---

bool criterion4(std::string& detail) {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    std::uniform_int_distribution<size_t> dims(1, 6), pad(0, 3);
    size_t bad = 0;
    for (int c = 0; c < 50; ++c) {
        size_t s = dims(rng), n = s + pad(rng);
        std::vector<GaussianRational> t;
        for (size_t j = 0; j < s; ++j) {
            mpq_class re(num(rng), den(rng)), im(num(rng), den(rng));
            t.emplace_back(re, im);
        }
        Point want = Point::zero(n);
        for (size_t j = 0; j < s; ++j) want.coords[j] = t[j];
        if (flow_constant_field(t, Point::zero(n), s) != want) ++bad;
    }
    detail = "50 exact translations, " + std::to_string(50 - bad) + " landed";
    return bad == 0;
}

// --- criterion 5: randomized algebra properties -------------------------

Polynomial random_poly(std::mt19937_64& rng, size_t nvars, int max_terms, uint32_t max_exp,
                       int max_coef) {
    std::uniform_int_distribution<int> terms(0, max_terms), coef(-max_coef, max_coef);
    std::uniform_int_distribution<uint32_t> expo(0, max_exp);
    std::uniform_int_distribution<int> imag(0, 1);
    Polynomial p = Polynomial::zero(nvars);
    int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        Exponents e(nvars, 0);
        for (size_t j = 0; j < nvars; ++j) e[j] = expo(rng);
        GaussianRational c = imag(rng) ? GaussianRational(mpq_class(coef(rng)), mpq_class(coef(rng)))
                                       : GaussianRational(coef(rng));
        p += Polynomial::monomial(nvars, e, c);
    }
    return p;
}

VectorField random_field(std::mt19937_64& rng, size_t nvars) {
    std::vector<Polynomial> comps;
    for (size_t j = 0; j < nvars; ++j) comps.push_back(random_poly(rng, nvars, 2, 2, 3));
    return VectorField(std::move(comps));
}

VectorField vf_add(const VectorField& a, const VectorField& b) {
    std::vector<Polynomial> comps;
    for (size_t j = 0; j < a.nvars(); ++j) comps.push_back(a.components[j] + b.components[j]);
    return VectorField(std::move(comps));
}

VectorField vf_scale(const Polynomial& f, const VectorField& w) {
    std::vector<Polynomial> comps;
    for (size_t j = 0; j < w.nvars(); ++j) comps.push_back(f * w.components[j]);
    return VectorField(std::move(comps));
}

VectorField vf_neg(const VectorField& a) {
    return vf_scale(Polynomial::constant(a.nvars(), GaussianRational(-1)), a);
}

bool criterion5(std::string& detail) {
    const size_t nvars = 3;
    const int trials = 1000;
    std::mt19937_64 rng(505);
    int anti = 0, jacobi = 0, leibniz = 0, parse = 0, eval = 0;

    for (int c = 0; c < trials; ++c) {
        VectorField u = random_field(rng, nvars), v = random_field(rng, nvars);
        if (lie_bracket(u, v) == vf_neg(lie_bracket(v, u))) ++anti;
    }
    for (int c = 0; c < trials; ++c) {
        VectorField u = random_field(rng, nvars), v = random_field(rng, nvars),
                    w = random_field(rng, nvars);
        VectorField total = vf_add(lie_bracket(u, lie_bracket(v, w)),
                                   vf_add(lie_bracket(v, lie_bracket(w, u)),
                                          lie_bracket(w, lie_bracket(u, v))));
        if (total.is_zero()) ++jacobi;
    }
    for (int c = 0; c < trials; ++c) {
        VectorField u = random_field(rng, nvars), w = random_field(rng, nvars);
        Polynomial f = random_poly(rng, nvars, 2, 2, 3);
        VectorField lhs = lie_bracket(u, vf_scale(f, w));
        VectorField rhs = vf_add(vf_scale(vf_apply(u, f), w), vf_scale(f, lie_bracket(u, w)));
        if (lhs == rhs) ++leibniz;
    }
    for (int c = 0; c < trials; ++c) {
        Polynomial p = random_poly(rng, nvars, 4, 3, 9);
        if (poly_parse(p.str(), nvars) == p) ++parse;
    }
    for (int c = 0; c < trials; ++c) {
        Polynomial p = random_poly(rng, nvars, 3, 3, 9), q = random_poly(rng, nvars, 3, 3, 9),
                   r = random_poly(rng, nvars, 3, 3, 9);
        Point x = sample_point(nvars, derive_seed(55, c));
        if ((p * q + r).eval(x) == p.eval(x) * q.eval(x) + r.eval(x)) ++eval;
    }

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "antisymmetry %d/%d, jacobi %d/%d, leibniz %d/%d, parser %d/%d, eval %d/%d",
                  anti, trials, jacobi, trials, leibniz, trials, parse, trials, eval, trials);
    detail = buf;
    return anti == trials && jacobi == trials && leibniz == trials && parse == trials &&
           eval == trials;
}

// --- criterion 6: the two presentations of each family agree ------------

// Generic sample: every coordinate nonzero. Kernel bases present the full
// fiber off a thin locus (e.g. a coordinate hyperplane); agreement between
// presentations is a statement about generic points.
std::vector<Point> generic_points(size_t nvars, uint64_t seed, size_t count) {
    std::vector<Point> out;
    uint64_t idx = 0;
    while (out.size() < count) {
        Point x = sample_point(nvars, derive_seed(seed, idx++));
        bool nonzero = true;
        for (const GaussianRational& c : x.coords) nonzero = nonzero && !c.is_zero();
        if (nonzero) out.push_back(std::move(x));
    }
    return out;
}

bool criterion6(std::string& detail) {
    std::vector<FamilyInstance> insts;
    for (size_t n = 2; n <= 6; ++n) insts.push_back(example1_lines(n));
    for (size_t n = 2; n <= 6; ++n) insts.push_back(example1_quadrics(n));
    for (size_t n = 4; n <= 6; ++n) insts.push_back(example2(n));
    for (const Triple& t : grid_triples()) insts.push_back(example3(t.n, t.k, t.r));

    size_t bad = 0, pairs = 0;
    const std::vector<Polynomial> no_levels;
    for (size_t idx = 0; idx < insts.size(); ++idx) {
        const FamilyInstance& inst = insts[idx];
        const std::vector<Polynomial>& levels =
            inst.by_level_sets ? inst.by_level_sets->level_sets() : no_levels;
        bool ok = annihilation_check(inst.foliation.generators(), levels);
        if (inst.by_level_sets) {
            ++pairs;
            std::vector<Point> pts = generic_points(inst.foliation.nvars(), derive_seed(66, idx), 100);
            ok = ok && batch_fiber_dims(inst.foliation, pts) ==
                           batch_fiber_dims(*inst.by_level_sets, pts);
        }
        if (!ok) ++bad;
    }
    detail = std::to_string(insts.size()) + " instances annihilate, " + std::to_string(pairs) +
             " presentation pairs agree at 100 points each" +
             (bad ? " (" + std::to_string(bad) + " failed)" : "");
    return bad == 0;
}

// --- criterion 7: leaf traces conserve the defining polynomials ---------

bool criterion7(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    Foliation quad = *example1_quadrics(3).by_level_sets;
    Foliation ex3 = *example3(5, 3, 2).by_level_sets;
    size_t bad = 0;
    double worst = 0;

    auto run_starts = [&](const Foliation& f, uint64_t seed) {
        size_t k = generic_rank(f, 0);
        size_t found = 0;
        uint64_t idx = 0;
        while (found < 10) {
            Point x = sample_point(f.nvars(), derive_seed(seed, idx++));
            if (tangent_fiber(f, x).dim != k) continue; // singular draw: skip
            std::vector<std::complex<double>> start;
            for (const GaussianRational& c : x.coords) start.push_back(c.to_complex());
            TraceRecord tr = trace_leaf(f, start, 0, 0.0, 1.0, 1e-3);
            worst = std::max(worst, tr.drift);
            if (!(tr.drift <= 1e-6)) ++bad;
            ++found;
        }
    };
    run_starts(quad, 700);
    run_starts(ex3, 701);

    // Halving measured where truncation dominates rounding.
    size_t halved_ok = 0;
    TraceRecord h1 = trace_leaf(quad, {{1, 0}, {0.5, 0}, {-0.75, 0}}, 0, 0.0, 4.0, 0.25);
    if (h1.drift > 1e-9 && h1.halved_step_drift * 4 <= h1.drift) ++halved_ok;
    TraceRecord h2 =
        trace_leaf(ex3, {{1, 0}, {0.5, 0}, {-0.75, 0}, {2, 0}, {1, 0}}, 0, 0.0, 4.0, 0.25);
    if (h2.drift > 1e-9 && h2.halved_step_drift * 4 <= h2.drift) ++halved_ok;

    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "20 starts, worst drift %.2e, halving 4x on %zu/2, %s",
                  worst, halved_ok, fmt_secs(secs).c_str());
    detail = buf;
    return bad == 0 && halved_ok == 2 && secs < 10.0;
}

// --- criterion 8: constructor acceptance matches the dimension bound ----

bool criterion8(std::string& detail) {
    size_t checked = 0, bad = 0;
    for (size_t n = 2; n <= 8; ++n)
        for (size_t k = 1; k < n; ++k)
            for (size_t r = 0; r < k; ++r) {
                ++checked;
                bool oracle = static_cast<long>(r) >= static_cast<long>(n) - static_cast<long>(k) - 1;
                bool constructed = true;
                try {
                    example3(n, k, r);
                } catch (const ProfileError&) {
                    constructed = false;
                }
                if (constructed != oracle || malgrange_check(n, k, r) != oracle) ++bad;
            }
    detail = std::to_string(checked) + " ordered triples, " + std::to_string(checked - bad) +
             " match the bound oracle";
    return checked > 0 && bad == 0;
}

} // namespace

int main() {
    struct Row {
        const char* name;
        bool (*fn)(std::string&);
    };
    const Row rows[] = {
        {"family grid invariants", criterion1}, {"reduction cross-check", criterion2},
        {"split verdicts", criterion3},         {"flow landing", criterion4},
        {"algebra properties", criterion5},     {"presentation agreement", criterion6},
        {"trace conservation", criterion7},     {"dimension gate", criterion8},
    };
    int failures = 0;
    for (size_t i = 0; i < 8; ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = rows[i].fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("criterion %zu (%s): %s — %s\n", i + 1, rows[i].name, ok ? "PASS" : "FAIL",
                    detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/8 criteria passed\n", 8 - failures);
    return failures;
}
