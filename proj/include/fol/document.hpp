#ifndef FOL_DOCUMENT_HPP
#define FOL_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fol/families.hpp"
#include "fol/foliation.hpp"
#include "fol/structure.hpp"

namespace fol {

// On-disk description of a foliation: dimension, presentation kind,
// polynomial strings (expression grammar), optional declared rank,
// optional coordinate roles, optional expected profiles. A document may
// carry both presentations; `presentation` names the one to construct.
struct FoliationDocument {
    size_t n = 0;
    std::string presentation; // "generators" | "level_sets"
    std::vector<std::vector<std::string>> generators; // one list of n strings per field
    std::vector<std::string> level_sets;
    std::optional<size_t> declared_rank;
    std::optional<CoordinateRoles> roles;
    std::optional<FoliationProfile> expected_profile;
    std::optional<FoliationProfile> expected_eta_profile;
    std::optional<FoliationProfile> expected_alpha_profile;

    static FoliationDocument from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    // Serialize a family instance with both presentations and expected data.
    static FoliationDocument from_family(const FamilyInstance& inst);

    // Construct the foliation named by `presentation`.
    Foliation build() const;
    // Construct the level-set presentation when the document carries one.
    std::optional<Foliation> build_level_sets() const;
};

} // namespace fol

#endif
