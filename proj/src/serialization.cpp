#include "salarium/serialization.hpp"

#include <array>
#include <fstream>
#include <string>

namespace salarium {

namespace {

nlohmann::json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

double number_at(const nlohmann::json& j, const std::string& context) {
    if (!j.is_number()) {
        throw ParseError(context + " must be a number");
    }
    return j.get<double>();
}

int integer_at(const nlohmann::json& j, const std::string& context) {
    if (!j.is_number_integer()) {
        throw ParseError(context + " must be an integer");
    }
    return j.get<int>();
}

std::string string_at(const nlohmann::json& j, const std::string& context) {
    if (!j.is_string()) {
        throw ParseError(context + " must be a string");
    }
    return j.get<std::string>();
}

Money money_at(const nlohmann::json& j, const std::string& context) {
    const double value = number_at(j, context);
    try {
        return Money(value);
    } catch (const ValidationError&) {
        throw ValidationError(context + " must be a finite non-negative amount of KZT");
    }
}

Provenance provenance_at(const nlohmann::json& j, const std::string& context) {
    const std::string s = string_at(j, context);
    try {
        return provenance_from_string(s);
    } catch (const ValidationError&) {
        throw ParseError(context + ": unknown provenance '" + s + "'");
    }
}

// {"value": <number>, "provenance": <string>}; a missing provenance marks
// the entry as a user assumption.
Param param_at(const nlohmann::json& j, const std::string& context) {
    if (!j.is_object()) {
        throw ParseError(context + " must be a {value, provenance} object");
    }
    Param p;
    bool have_value = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "value") {
            p.value = number_at(value, context + ".value");
            have_value = true;
        } else if (key == "provenance") {
            p.source = provenance_at(value, context + ".provenance");
        } else {
            throw ParseError(context + ": unknown key '" + key + "'");
        }
    }
    if (!have_value) {
        throw ParseError(context + " is missing 'value'");
    }
    return p;
}

nlohmann::json param_to_json(const Param& p) {
    return nlohmann::json{{"value", p.value}, {"provenance", std::string(to_string(p.source))}};
}

struct ParamField {
    const char* name;
    Param ModelParameters::* member;
};

constexpr std::array<ParamField, 25> kParamFields = {{
    {"base_w0", &ModelParameters::base_w0},
    {"base_alpha", &ModelParameters::base_alpha},
    {"base_beta", &ModelParameters::base_beta},
    {"base_t0", &ModelParameters::base_t0},
    {"base_lambda", &ModelParameters::base_lambda},
    {"pub_gamma", &ModelParameters::pub_gamma},
    {"pub_delta", &ModelParameters::pub_delta},
    {"cit_gamma", &ModelParameters::cit_gamma},
    {"cit_delta", &ModelParameters::cit_delta},
    {"grant_gamma", &ModelParameters::grant_gamma},
    {"golden_phi", &ModelParameters::golden_phi},
    {"grant_impact", &ModelParameters::grant_impact},
    {"grant_count_cap", &ModelParameters::grant_count_cap},
    {"collab_lambda", &ModelParameters::collab_lambda},
    {"collab_mu", &ModelParameters::collab_mu},
    {"skill_lambda", &ModelParameters::skill_lambda},
    {"skill_mu", &ModelParameters::skill_mu},
    {"insig_lambda", &ModelParameters::insig_lambda},
    {"insig_mu", &ModelParameters::insig_mu},
    {"intl_lambda", &ModelParameters::intl_lambda},
    {"intl_mu", &ModelParameters::intl_mu},
    {"cap_internal_projects", &ModelParameters::cap_internal_projects},
    {"cap_certifications", &ModelParameters::cap_certifications},
    {"cap_insignia", &ModelParameters::cap_insignia},
    {"cap_intl_projects", &ModelParameters::cap_intl_projects},
}};

const ParamField* find_param_field(const std::string& name) {
    for (const ParamField& f : kParamFields) {
        if (name == f.name) return &f;
    }
    return nullptr;
}

} // namespace

ResearcherProfile profile_from_json(const nlohmann::json& j, const std::string& context) {
    if (!j.is_object()) {
        throw ParseError(context + " must be an object");
    }
    ResearcherProfile p;
    for (const auto& [key, value] : j.items()) {
        const std::string at = context + "." + key;
        if (key == "experience_years") {
            p.experience_years = number_at(value, at);
        } else if (key == "qualification_level") {
            p.qualification_level = integer_at(value, at);
        } else if (key == "publications") {
            p.publications = integer_at(value, at);
        } else if (key == "h_index") {
            p.h_index = integer_at(value, at);
        } else if (key == "grant_count") {
            p.grant_count = integer_at(value, at);
        } else if (key == "grant_total_kzt") {
            p.grant_total_kzt = money_at(value, at);
        } else if (key == "internal_projects") {
            p.internal_projects = integer_at(value, at);
        } else if (key == "certifications") {
            p.certifications = integer_at(value, at);
        } else if (key == "insignia_count") {
            p.insignia_count = integer_at(value, at);
        } else if (key == "intl_projects") {
            p.intl_projects = integer_at(value, at);
        } else if (key == "expectancy") {
            p.expectancy = number_at(value, at);
        } else if (key == "instrumentality") {
            p.instrumentality = number_at(value, at);
        } else if (key == "valence") {
            p.valence = number_at(value, at);
        } else {
            throw ParseError(context + ": unknown key '" + key + "'");
        }
    }
    try {
        validate(p);
    } catch (const ValidationError& e) {
        throw ValidationError(context + ": " + e.what());
    }
    return p;
}

nlohmann::json profile_to_json(const ResearcherProfile& profile) {
    return nlohmann::json{
        {"experience_years", profile.experience_years},
        {"qualification_level", profile.qualification_level},
        {"publications", profile.publications},
        {"h_index", profile.h_index},
        {"grant_count", profile.grant_count},
        {"grant_total_kzt", profile.grant_total_kzt.amount()},
        {"internal_projects", profile.internal_projects},
        {"certifications", profile.certifications},
        {"insignia_count", profile.insignia_count},
        {"intl_projects", profile.intl_projects},
        {"expectancy", profile.expectancy},
        {"instrumentality", profile.instrumentality},
        {"valence", profile.valence},
    };
}

ModelParameters parameters_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ParseError("parameters must be a JSON object");
    }
    ModelParameters params = ModelParameters::defaults();
    for (const auto& [key, value] : j.items()) {
        if (const ParamField* f = find_param_field(key)) {
            params.*(f->member) = param_at(value, key);
        } else if (key == "base_alpha_additive") {
            params.base_alpha_additive = param_at(value, key);
        } else if (key == "base_form") {
            const std::string s = string_at(value, key);
            try {
                params.base_form = base_form_from_string(s);
            } catch (const ValidationError&) {
                throw ParseError("base_form: unknown form '" + s + "'");
            }
        } else if (key == "grant_amount_semantics") {
            const std::string s = string_at(value, key);
            try {
                params.grant_amount_semantics = grant_semantics_from_string(s);
            } catch (const ValidationError&) {
                throw ParseError("grant_amount_semantics: unknown value '" + s + "'");
            }
        } else if (key == "max_profile") {
            params.max_profile = profile_from_json(value, "max_profile");
        } else {
            throw ParseError("parameters: unknown key '" + key + "'");
        }
    }
    validate(params);
    return params;
}

nlohmann::json parameters_to_json(const ModelParameters& params) {
    nlohmann::json j = nlohmann::json::object();
    for (const ParamField& f : kParamFields) {
        j[f.name] = param_to_json(params.*(f.member));
    }
    if (params.base_alpha_additive) {
        j["base_alpha_additive"] = param_to_json(*params.base_alpha_additive);
    }
    j["base_form"] = std::string(to_string(params.base_form));
    j["grant_amount_semantics"] = std::string(to_string(params.grant_amount_semantics));
    j["max_profile"] = profile_to_json(params.max_profile);
    return j;
}

ModelParameters load_parameters(const std::filesystem::path& path) {
    return parameters_from_json(parse_file(path));
}

void save_parameters(const std::filesystem::path& path, const ModelParameters& params) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open '" + path.string() + "' for writing");
    }
    out << parameters_to_json(params).dump(2) << '\n';
    if (!out) {
        throw ParseError("failed while writing '" + path.string() + "'");
    }
}

std::vector<NamedProfile> profiles_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw ParseError("profiles must be a JSON array");
    }
    std::vector<NamedProfile> profiles;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const nlohmann::json& entry = j[i];
        const std::string slot = "profiles[" + std::to_string(i) + "]";
        if (!entry.is_object()) {
            throw ParseError(slot + " must be an object");
        }
        if (!entry.contains("name")) {
            throw ParseError(slot + " is missing 'name'");
        }
        const std::string name = string_at(entry.at("name"), slot + ".name");
        if (name.empty()) {
            throw ParseError(slot + ".name must not be empty");
        }
        for (const NamedProfile& seen : profiles) {
            if (seen.name == name) {
                throw ParseError("duplicate profile name '" + name + "'");
            }
        }
        nlohmann::json fields = entry;
        fields.erase("name");
        profiles.push_back({name, profile_from_json(fields, "profile '" + name + "'")});
    }
    return profiles;
}

std::vector<NamedProfile> load_profiles(const std::filesystem::path& path) {
    return profiles_from_json(parse_file(path));
}

AnchorSet anchors_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw ParseError("anchors must be a JSON array");
    }
    AnchorSet anchors;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const nlohmann::json& entry = j[i];
        const std::string slot = "anchors[" + std::to_string(i) + "]";
        if (!entry.is_object()) {
            throw ParseError(slot + " must be an object");
        }
        Anchor a;
        bool have_component = false;
        bool have_target = false;
        for (const auto& [key, value] : entry.items()) {
            const std::string at = slot + "." + key;
            if (key == "name") {
                a.name = string_at(value, at);
            } else if (key == "component") {
                const std::string s = string_at(value, at);
                try {
                    a.component = component_from_string(s);
                } catch (const ValidationError&) {
                    throw ParseError(at + ": unknown component '" + s + "'");
                }
                have_component = true;
            } else if (key == "target_kzt") {
                a.target = money_at(value, at);
                have_target = true;
            } else if (key == "tolerance") {
                a.tolerance = number_at(value, at);
            } else if (key == "solve_for") {
                a.solve_for = string_at(value, at);
            } else if (key == "profile") {
                a.profile = profile_from_json(value, at);
            } else {
                throw ParseError(slot + ": unknown key '" + key + "'");
            }
        }
        if (a.name.empty()) {
            throw ParseError(slot + " needs a non-empty 'name'");
        }
        if (!have_component) {
            throw ParseError(slot + " is missing 'component'");
        }
        if (!have_target) {
            throw ParseError(slot + " is missing 'target_kzt'");
        }
        anchors.push_back(std::move(a));
    }
    return anchors;
}

AnchorSet load_anchors(const std::filesystem::path& path) {
    return anchors_from_json(parse_file(path));
}

} // namespace salarium
