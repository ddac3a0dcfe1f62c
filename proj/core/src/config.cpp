#include "hecke/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hecke/errors.hpp"
#include "hecke/suite.hpp"

namespace hecke {

namespace {

using nlohmann::json;

struct OverrideField {
    const char* key;
    std::optional<Rational> ParamOverrides::*field;
};

constexpr OverrideField kOverrideFields[] = {
    {"q", &ParamOverrides::q},         {"Q0", &ParamOverrides::Q0},   {"QN", &ParamOverrides::QN},
    {"x0p", &ParamOverrides::x0p},     {"xNp", &ParamOverrides::xNp}, {"c_minus", &ParamOverrides::c_minus},
    {"c_plus", &ParamOverrides::c_plus},
};

Rational parse_override(const std::string& key, const json& v) {
    try {
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_string()) return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ConfigError("override " + key + ": " + e.what());
    }
    throw ConfigError("override " + key + " must be an integer or a \"p/q\" string");
}

bool is_pm_one(const Rational& x) { return x == Rational(1) || x == Rational(-1); }

template <class T>
T get_field(const json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config field '") + key + "' has the wrong type");
    }
}

}  // namespace

RunConfig RunConfig::from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::vector<std::string> known{"local_dim", "sites",   "family", "seed",
                                                "specializations", "overrides", "suites", "output"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown config key '" + key + "'");
    }
    RunConfig cfg;
    if (j.contains("local_dim")) cfg.local_dim = get_field<int>(j, "local_dim");
    if (j.contains("sites")) cfg.sites = get_field<int>(j, "sites");
    if (j.contains("family")) {
        try {
            cfg.family = parse_family(get_field<std::string>(j, "family"));
        } catch (const ParseError& e) {
            throw ConfigError(e.what());
        }
    }
    if (j.contains("seed")) cfg.seed = get_field<std::uint64_t>(j, "seed");
    if (j.contains("specializations")) cfg.specializations = get_field<int>(j, "specializations");
    if (j.contains("suites")) cfg.suites = get_field<std::vector<std::string>>(j, "suites");
    if (j.contains("output")) cfg.output = get_field<std::string>(j, "output");
    if (j.contains("overrides")) {
        const json& o = j.at("overrides");
        if (!o.is_object()) throw ConfigError("overrides must be an object");
        for (const auto& [key, value] : o.items()) {
            const auto* f = std::find_if(std::begin(kOverrideFields), std::end(kOverrideFields),
                                         [&](const OverrideField& x) { return key == x.key; });
            if (f == std::end(kOverrideFields)) throw ConfigError("unknown override '" + key + "'");
            cfg.overrides.*(f->field) = parse_override(key, value);
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

void RunConfig::apply_env() {
    const char* env = std::getenv("HECKE_SEED");
    if (!env || !*env) return;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string_view(env).size()) throw std::invalid_argument("trailing characters");
        seed = v;
    } catch (const std::exception&) {
        throw ConfigError(std::string("HECKE_SEED is not an unsigned integer: ") + env);
    }
}

void RunConfig::validate() const {
    if (local_dim != 2 && local_dim != 3) throw ConfigError("local_dim must be 2 or 3");
    const int max_sites = local_dim == 2 ? 6 : 4;
    if (sites < 1 || sites > max_sites) {
        throw ConfigError("sites must lie in [1, " + std::to_string(max_sites) + "] for local_dim " +
                          std::to_string(local_dim));
    }
    if (specializations < 1 || specializations > 16) throw ConfigError("specializations must lie in [1, 16]");
    for (const auto& s : suites) {
        const auto& all = suite_names();
        if (std::find(all.begin(), all.end(), s) == all.end()) throw ConfigError("unknown suite '" + s + "'");
    }
    std::vector<Rational> given;
    for (const auto& f : kOverrideFields) {
        const auto& v = overrides.*(f.field);
        if (!v) continue;
        if (v->is_zero()) throw ConfigError(std::string("override ") + f.key + " must be nonzero");
        const std::string_view key = f.key;
        if ((key == "q" || key == "Q0" || key == "QN") && is_pm_one(*v)) {
            throw ConfigError(std::string("override ") + f.key + " must differ from +-1");
        }
        if (std::find(given.begin(), given.end(), *v) != given.end()) {
            throw ConfigError(std::string("override ") + f.key + " coincides with another override");
        }
        given.push_back(*v);
    }
}

std::string RunConfig::to_json() const {
    json j;
    j["local_dim"] = local_dim;
    j["sites"] = sites;
    j["family"] = hecke::to_string(family);
    j["seed"] = seed;
    j["specializations"] = specializations;
    j["suites"] = suites.empty() ? suite_names() : suites;
    json o = json::object();
    for (const auto& f : kOverrideFields) {
        if (const auto& v = overrides.*(f.field)) o[f.key] = v->fraction();
    }
    j["overrides"] = o;
    return j.dump();
}

Rational sample_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 97) + 1;
    const long den = static_cast<long>(rng() % 97) + 1;
    const long sign = (rng() % 2) == 0 ? 1 : -1;
    return Rational(sign * num, den);
}

bool on_generic_locus(const HeckeParams& p) {
    const std::vector<Rational> free{p.q, p.Q0, p.QN, p.x0p, p.xNp, p.c_minus, p.c_plus};
    for (std::size_t i = 0; i < free.size(); ++i) {
        if (free[i].is_zero()) return false;
        for (std::size_t k = i + 1; k < free.size(); ++k) {
            if (free[i] == free[k]) return false;
        }
    }
    return !is_pm_one(p.q) && !is_pm_one(p.Q0) && !is_pm_one(p.QN);
}

std::vector<HeckeParams> sample_params(const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<HeckeParams> out;
    const ParamOverrides& o = cfg.overrides;
    while (static_cast<int>(out.size()) < cfg.specializations) {
        // Always draw all seven so overrides do not shift the stream.
        Rational v[7];
        for (auto& x : v) x = sample_rational(rng);
        HeckeParams p = HeckeParams::make(o.q.value_or(v[0]), o.Q0.value_or(v[1]), o.QN.value_or(v[2]),
                                          o.x0p.value_or(v[3]), o.xNp.value_or(v[4]), o.c_minus.value_or(v[5]),
                                          o.c_plus.value_or(v[6]));
        if (!on_generic_locus(p)) continue;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace hecke
