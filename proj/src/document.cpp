#include "fol/document.hpp"

#include "fol/errors.hpp"

namespace fol {

namespace {

using nlohmann::json;

// Signed non-negative integers count too: programmatically built json
// stores plain int literals as signed numbers.
bool is_count(const json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
}

std::vector<size_t> index_list(const json& j, const char* field) {
    if (!j.is_array()) throw Error(std::string(field) + " must be an index array");
    std::vector<size_t> out;
    for (const auto& v : j) {
        if (!is_count(v)) throw Error(std::string(field) + " indices must be non-negative integers");
        out.push_back(v.get<size_t>());
    }
    return out;
}

FoliationProfile profile_from(const json& j, const char* field) {
    if (!j.is_array() || j.size() != 4)
        throw Error(std::string(field) + " must be a [n,k,r,s] array");
    for (const auto& v : j)
        if (!is_count(v)) throw Error(std::string(field) + " entries must be non-negative integers");
    return FoliationProfile(j[0].get<size_t>(), j[1].get<size_t>(), j[2].get<size_t>(),
                            j[3].get<size_t>());
}

json profile_to(const FoliationProfile& p) { return json::array({p.n, p.k, p.r, p.s}); }

} // namespace

FoliationDocument FoliationDocument::from_json(const json& j) {
    FoliationDocument doc;
    if (!j.is_object()) throw Error("document must be an object");
    if (!j.contains("n") || !is_count(j["n"]))
        throw Error("document needs a positive integer field n");
    doc.n = j["n"].get<size_t>();
    if (!j.contains("presentation") || !j["presentation"].is_string())
        throw Error("document needs a presentation field");
    doc.presentation = j["presentation"].get<std::string>();
    if (doc.presentation != "generators" && doc.presentation != "level_sets")
        throw Error("presentation must be \"generators\" or \"level_sets\"");

    if (j.contains("generators")) {
        for (const auto& g : j["generators"]) {
            std::vector<std::string> comps;
            for (const auto& c : g) {
                if (!c.is_string()) throw Error("generator components must be strings");
                comps.push_back(c.get<std::string>());
            }
            doc.generators.push_back(std::move(comps));
        }
    }
    if (j.contains("level_sets")) {
        for (const auto& p : j["level_sets"]) {
            if (!p.is_string()) throw Error("level-set entries must be strings");
            doc.level_sets.push_back(p.get<std::string>());
        }
    }
    if (j.contains("declared_rank")) doc.declared_rank = j["declared_rank"].get<size_t>();
    if (j.contains("roles")) {
        const json& r = j["roles"];
        CoordinateRoles roles;
        if (r.contains("z")) roles.z = index_list(r["z"], "roles.z");
        if (r.contains("az")) roles.az = index_list(r["az"], "roles.az");
        if (r.contains("bz")) roles.bz = index_list(r["bz"], "roles.bz");
        if (r.contains("d")) roles.d = index_list(r["d"], "roles.d");
        doc.roles = std::move(roles);
    }
    if (j.contains("expected")) {
        const json& e = j["expected"];
        if (e.contains("profile")) doc.expected_profile = profile_from(e["profile"], "expected.profile");
        if (e.contains("eta_profile"))
            doc.expected_eta_profile = profile_from(e["eta_profile"], "expected.eta_profile");
        if (e.contains("alpha_profile"))
            doc.expected_alpha_profile = profile_from(e["alpha_profile"], "expected.alpha_profile");
    }
    return doc;
}

json FoliationDocument::to_json() const {
    json j;
    j["n"] = n;
    j["presentation"] = presentation;
    if (!generators.empty()) {
        json gens = json::array();
        for (const auto& g : generators) gens.push_back(g);
        j["generators"] = std::move(gens);
    }
    if (!level_sets.empty()) j["level_sets"] = level_sets;
    if (declared_rank) j["declared_rank"] = *declared_rank;
    if (roles) {
        json r;
        r["z"] = roles->z;
        r["az"] = roles->az;
        r["bz"] = roles->bz;
        r["d"] = roles->d;
        j["roles"] = std::move(r);
    }
    if (expected_profile || expected_eta_profile || expected_alpha_profile) {
        json e;
        if (expected_profile) e["profile"] = profile_to(*expected_profile);
        if (expected_eta_profile) e["eta_profile"] = profile_to(*expected_eta_profile);
        if (expected_alpha_profile) e["alpha_profile"] = profile_to(*expected_alpha_profile);
        j["expected"] = std::move(e);
    }
    return j;
}

FoliationDocument FoliationDocument::from_family(const FamilyInstance& inst) {
    FoliationDocument doc;
    doc.n = inst.foliation.nvars();
    doc.presentation = inst.by_level_sets ? "level_sets" : "generators";
    for (const auto& g : inst.foliation.generators()) {
        std::vector<std::string> comps;
        comps.reserve(doc.n);
        for (const auto& c : g.components) comps.push_back(c.str());
        doc.generators.push_back(std::move(comps));
    }
    if (inst.by_level_sets)
        for (const auto& p : inst.by_level_sets->level_sets()) doc.level_sets.push_back(p.str());
    doc.declared_rank = inst.foliation.declared_rank();
    doc.roles = inst.roles;
    doc.expected_profile = inst.expected_profile;
    doc.expected_eta_profile = inst.expected_eta_profile;
    doc.expected_alpha_profile = inst.expected_alpha_profile;
    return doc;
}

Foliation FoliationDocument::build() const {
    if (presentation == "level_sets") {
        std::vector<Polynomial> levels;
        levels.reserve(level_sets.size());
        for (const auto& s : level_sets) levels.push_back(poly_parse(s, n));
        return Foliation::from_level_sets(n, std::move(levels), declared_rank);
    }
    std::vector<VectorField> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.size() != n)
            throw DimensionError("each generator needs exactly n component polynomials");
        std::vector<Polynomial> comps;
        comps.reserve(n);
        for (const auto& s : g) comps.push_back(poly_parse(s, n));
        gens.push_back(VectorField(std::move(comps)));
    }
    return Foliation::from_generators(n, std::move(gens), declared_rank);
}

std::optional<Foliation> FoliationDocument::build_level_sets() const {
    if (level_sets.empty()) return std::nullopt;
    std::vector<Polynomial> levels;
    levels.reserve(level_sets.size());
    for (const auto& s : level_sets) levels.push_back(poly_parse(s, n));
    return Foliation::from_level_sets(n, std::move(levels), declared_rank);
}

} // namespace fol
