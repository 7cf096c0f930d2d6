#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "salarium/calibration.hpp"

namespace salarium {

struct NamedProfile {
    std::string name;
    ResearcherProfile profile;
};

// Parameters file: one key per ModelParameters field; numeric entries are
// {"value": ..., "provenance": ...} objects. Missing fields fall back to the
// defaults so a partial file is a valid override set. Unknown keys are
// rejected. Values round-trip exactly through save/load.
ModelParameters parameters_from_json(const nlohmann::json& j);
nlohmann::json parameters_to_json(const ModelParameters& params);
ModelParameters load_parameters(const std::filesystem::path& path);
void save_parameters(const std::filesystem::path& path, const ModelParameters& params);

// Profiles file: array of objects, each with a unique "name" plus
// ResearcherProfile fields (omitted fields default to the zero profile).
std::vector<NamedProfile> profiles_from_json(const nlohmann::json& j);
std::vector<NamedProfile> load_profiles(const std::filesystem::path& path);

// Anchors file: array of {name, component, target_kzt, tolerance, profile,
// solve_for?}.
AnchorSet anchors_from_json(const nlohmann::json& j);
AnchorSet load_anchors(const std::filesystem::path& path);

nlohmann::json profile_to_json(const ResearcherProfile& profile);
ResearcherProfile profile_from_json(const nlohmann::json& j, const std::string& context);

} // namespace salarium
