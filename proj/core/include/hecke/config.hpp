#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/hecke_rep.hpp"

namespace hecke {

struct ParamOverrides {
    std::optional<Rational> q, Q0, QN, x0p, xNp, c_minus, c_plus;
};

struct RunConfig {
    int local_dim = 2;
    int sites = 3;
    Family family = Family::C;
    std::uint64_t seed = 20240611;
    int specializations = 3;
    ParamOverrides overrides;
    std::vector<std::string> suites;  // empty runs everything
    std::string output;

    // Throws ConfigError on unknown keys, malformed rationals, out-of-range
    // sizes or overrides off the generic locus.
    static RunConfig from_json(std::string_view text);
    static RunConfig load(const std::filesystem::path& path);

    // HECKE_SEED, when set, replaces the seed.
    void apply_env();
    void validate() const;
    [[nodiscard]] std::string to_json() const;
};

// Numerators and denominators in [1, 97] with a random sign.
Rational sample_rational(std::mt19937_64& rng);

// Nonzero, q, Q0, QN away from +-1, and the free values pairwise distinct.
bool on_generic_locus(const HeckeParams& p);

// Specializations derived from the seed; overrides are kept fixed.
std::vector<HeckeParams> sample_params(const RunConfig& cfg);

}  // namespace hecke
