#include "fol/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fol/batch.hpp"
#include "fol/document.hpp"
#include "fol/errors.hpp"
#include "fol/families.hpp"
#include "fol/sampling.hpp"
#include "fol/structure.hpp"
#include "fol/tracer.hpp"

namespace fol::cli {

namespace {

using nlohmann::json;

constexpr double kDriftTolerance = 1e-6;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write " + out_path);
    f << text;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// "1,0,0" or "1+2i,0,3i" -> complex coordinates.
std::vector<std::complex<double>> parse_start(const std::string& text) {
    std::vector<std::complex<double>> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const char* s = tok.c_str();
        char* end = nullptr;
        double a = std::strtod(s, &end);
        if (end == s) throw Error("bad start coordinate: " + tok);
        if (*end == '\0') {
            out.emplace_back(a, 0.0);
        } else if (*end == 'i' && end[1] == '\0') {
            out.emplace_back(0.0, a);
        } else {
            char* end2 = nullptr;
            double b = std::strtod(end, &end2);
            if (end2 == end || *end2 != 'i' || end2[1] != '\0')
                throw Error("bad start coordinate: " + tok);
            out.emplace_back(a, b);
        }
    }
    if (out.empty()) throw Error("empty start point");
    return out;
}

json point_to_json(const Point& p) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(c.str());
    return coords;
}

json profile_to_json(const FoliationProfile& p) { return json::array({p.n, p.k, p.r, p.s}); }

constexpr size_t kUnset = static_cast<size_t>(-1);

int cmd_family(const std::string& name, size_t n, size_t k, size_t r,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
    std::optional<FamilyInstance> inst;
    if (name == "example1-lines") {
        inst = example1_lines(n);
    } else if (name == "example1-quadrics") {
        inst = example1_quadrics(n);
    } else if (name == "example2") {
        inst = example2(n);
    } else if (name == "example3") {
        if (k == kUnset || r == kUnset) {
            err << "example3 needs --k and --r\n";
            return 1;
        }
        inst = example3(n, k, r);
    } else {
        err << "unknown family: " << name << "\n";
        return 1;
    }
    FoliationDocument doc = FoliationDocument::from_family(*inst);
    write_output(doc.to_json().dump(2) + "\n", out_path, out);
    return 0;
}

int cmd_analyze(const std::string& in_path, size_t points, uint64_t seed, std::ostream& out) {
    FoliationDocument doc = FoliationDocument::from_json(json::parse(read_file(in_path)));
    Foliation f = doc.build();
    size_t rank = generic_rank(f, seed);
    bool involutive = involutivity_check(f, seed, 8);

    std::vector<Point> pts = points_for(f.nvars(), seed, points);
    std::vector<StratumReport> reports = batch_stratum_reports(f, pts, seed);

    json j;
    j["n"] = f.nvars();
    j["presentation"] = doc.presentation;
    j["generic_rank"] = rank;
    j["involutive"] = involutive;
    json rows = json::array();
    for (const auto& r : reports) {
        json row;
        row["coords"] = point_to_json(r.point);
        row["fiber_dim"] = r.fiber_dim;
        row["stratum_index"] = r.stratum_index;
        row["singular"] = r.singular;
        rows.push_back(std::move(row));
    }
    j["points"] = std::move(rows);
    if (f.kind() == PresentationKind::LevelSets) {
        json eqs = json::array();
        for (const auto& p : singular_equations(f)) eqs.push_back(p.str());
        j["singular_equations"] = std::move(eqs);
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_decompose(const std::string& in_path, uint64_t seed, std::ostream& out,
                  std::ostream& err) {
    FoliationDocument doc = FoliationDocument::from_json(json::parse(read_file(in_path)));
    if (!doc.roles) {
        err << "decomposition needs coordinate roles (z/az/bz/d)\n";
        return 4;
    }
    Foliation f = doc.build();
    FoliationProfile profile;
    if (doc.expected_profile) {
        profile = *doc.expected_profile;
    } else {
        size_t k = doc.declared_rank ? *doc.declared_rank : generic_rank(f, seed);
        profile = FoliationProfile(doc.n, k, doc.roles->z.size(), doc.roles->az.size());
    }

    DecompositionReport report = build_decomposition(f, profile, *doc.roles, seed);
    SplitVerdict verdict = split_check(report, f, seed);

    json j;
    j["profile"] = profile_to_json(report.profile);
    j["az_indices"] = report.az_indices;
    j["bz_indices"] = report.bz_indices;
    j["d_indices"] = report.d_indices;
    json checks;
    for (const auto& [name, ok] : report.checks) checks[name] = ok;
    j["checks"] = std::move(checks);

    FoliationDocument eta_doc;
    eta_doc.n = report.eta.nvars();
    eta_doc.presentation = "generators";
    for (const auto& g : report.eta.generators()) {
        std::vector<std::string> comps;
        comps.reserve(eta_doc.n);
        for (const auto& c : g.components) comps.push_back(c.str());
        eta_doc.generators.push_back(std::move(comps));
    }
    eta_doc.declared_rank = report.eta_profile.k;
    j["eta"] = eta_doc.to_json();
    j["eta_profile"] = profile_to_json(report.eta_profile);
    j["split"] = verdict.split;
    if (verdict.alpha_profile) j["alpha_profile"] = profile_to_json(*verdict.alpha_profile);
    j["split_detail"] = verdict.detail;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_trace(const std::string& in_path, const std::string& start_text, size_t gen,
              double theta, double total_time, double step, const std::string& out_path,
              std::ostream& out) {
    FoliationDocument doc = FoliationDocument::from_json(json::parse(read_file(in_path)));
    std::optional<Foliation> f = doc.build_level_sets();
    if (!f)
        throw UnsupportedPresentationError(
            "tracing needs a document with a level-set presentation");
    std::vector<std::complex<double>> start = parse_start(start_text);

    TraceRecord rec = trace_leaf(*f, start, gen, theta, total_time, step);

    std::ostringstream csv;
    csv << "tau";
    for (size_t j = 1; j <= f->nvars(); ++j) csv << ",re_z" << j << ",im_z" << j;
    csv << "\n";
    for (size_t t = 0; t < rec.points.size(); ++t) {
        csv << fmt_double(static_cast<double>(t) * rec.step);
        for (const auto& z : rec.points[t])
            csv << "," << fmt_double(z.real()) << "," << fmt_double(z.imag());
        csv << "\n";
    }
    csv << "#drift," << fmt_double(rec.drift) << "\n";
    write_output(csv.str(), out_path, out);

    json j;
    j["points"] = rec.points.size();
    j["step"] = rec.step;
    j["theta"] = rec.direction_angle;
    j["drift"] = rec.drift;
    j["halved_step_drift"] = rec.halved_step_drift;
    j["tolerance"] = kDriftTolerance;
    if (!out_path.empty()) {
        j["out"] = out_path;
        out << j.dump(2) << "\n";
    }
    return rec.drift <= kDriftTolerance ? 0 : 6;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of polynomial foliations: families, stratification, "
                 "decomposition, and leaf tracing"};
    app.require_subcommand(1);

    std::string family_name, family_out;
    size_t family_n = 0;
    size_t family_k = kUnset, family_r = kUnset;
    CLI::App* fam = app.add_subcommand("family", "Write a built-in family document");
    fam->add_option("name", family_name,
                    "example1-lines | example1-quadrics | example2 | example3")
        ->required();
    fam->add_option("--n", family_n, "ambient dimension")->required();
    fam->add_option("--k", family_k, "generic rank (example3)");
    fam->add_option("--r", family_r, "singular-set dimension (example3)");
    fam->add_option("--out", family_out, "output path (default: stdout)");

    std::string analyze_in;
    size_t analyze_points = 8;
    uint64_t analyze_seed = 0;
    CLI::App* analyze = app.add_subcommand("analyze", "Rank, strata, and involutivity report");
    analyze->add_option("input", analyze_in, "foliation document")->required();
    analyze->add_option("--points", analyze_points, "sample points to report (default 8)");
    analyze->add_option("--seed", analyze_seed, "sampling seed (default 0)");

    std::string decompose_in;
    uint64_t decompose_seed = 0;
    CLI::App* decompose =
        app.add_subcommand("decompose", "Reduce across constant-rank directions and certify");
    decompose->add_option("input", decompose_in, "foliation document with roles")->required();
    decompose->add_option("--seed", decompose_seed, "sampling seed (default 0)");

    std::string trace_in, trace_start, trace_out;
    size_t trace_gen = 0;
    double trace_theta = 0.0, trace_time = 1.0, trace_step = 1e-3;
    CLI::App* trace = app.add_subcommand("trace", "Integrate a generator and report drift");
    trace->add_option("input", trace_in, "foliation document with level sets")->required();
    trace->add_option("--start", trace_start, "comma-separated start coordinates")->required();
    trace->add_option("--gen", trace_gen, "generator index (default 0)");
    trace->add_option("--theta", trace_theta, "complex-time direction angle (default 0)");
    trace->add_option("--time", trace_time, "total integration time (default 1)");
    trace->add_option("--step", trace_step, "step size (default 1e-3)");
    trace->add_option("--out", trace_out, "trace file path (default: stdout)");

    std::vector<std::string> argv_store;
    argv_store.push_back("fol");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (fam->parsed())
            return cmd_family(family_name, family_n, family_k, family_r, family_out, out, err);
        if (analyze->parsed()) return cmd_analyze(analyze_in, analyze_points, analyze_seed, out);
        if (decompose->parsed()) return cmd_decompose(decompose_in, decompose_seed, out, err);
        if (trace->parsed())
            return cmd_trace(trace_in, trace_start, trace_gen, trace_theta, trace_time,
                             trace_step, trace_out, out);
        err << "no command given\n";
        return 1;
    } catch (const ContradictionError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const ProfileError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DecompositionError& e) {
        err << e.what() << "\n";
        return 5;
    } catch (const SingularStartError& e) {
        err << e.what() << "\n";
        return 7;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
}

} // namespace fol::cli
