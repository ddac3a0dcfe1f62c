#include "hecke/suite.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "hecke/errors.hpp"
#include "hecke/transfer.hpp"

namespace hecke {

namespace {

using nlohmann::json;

std::vector<Family> families_up_to(Family f) {
    switch (f) {
        case Family::A: return {Family::A};
        case Family::B: return {Family::A, Family::B};
        case Family::C:
        case Family::TL2B: return {Family::A, Family::B, Family::C};
    }
    return {};
}

CheckReport error_report(const std::string& name, const std::map<std::string, std::string>& params,
                         const std::exception& e) {
    CheckReport r;
    r.name = name;
    r.params = params;
    r.fail(witness("Error", e.what()));
    return r;
}

CheckReport info_report(const std::string& name, const HeckeRep& rep, const std::string& note) {
    CheckReport r;
    r.name = name;
    r.params = rep.echo();
    r.status = Status::Info;
    r.details["note"] = note;
    return r;
}

// Everything one specialization needs; Baxter and dual data are built on first use.
struct Specialization {
    int index;
    HeckeParams params;
    std::optional<HeckeRep> rep;
    std::optional<BaxterKit> kit;
    std::optional<DualKit> duals;
    std::vector<Rational> points;                        // second spectral variable
    Rational u0;                                         // inhomogeneity
    std::vector<std::pair<Rational, Rational>> pairs;    // commuting family
};

class Runner {
public:
    explicit Runner(const RunConfig& cfg) : cfg_(cfg) {
        const auto params = sample_params(cfg);
        std::mt19937_64 rng(cfg.seed ^ 0x5eed5eed5eed5eedULL);
        for (std::size_t i = 0; i < params.size(); ++i) {
            Specialization s{static_cast<int>(i), params[i], {}, {}, {}, {}, {}, {}};
            s.points = distinct_points(rng, 3, {});
            s.u0 = distinct_points(rng, 1, {Rational(1)}).front();
            for (int k = 0; k < 3; ++k) {
                const auto ab = distinct_points(rng, 2, {});
                s.pairs.emplace_back(ab[0], ab[1]);
            }
            specs_.push_back(std::move(s));
        }
    }

    std::vector<CheckReport> run() {
        const auto& wanted = cfg_.suites.empty() ? suite_names() : cfg_.suites;
        for (const auto& name : suite_names()) {
            if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
            for (auto& s : specs_) run_one(name, s);
            if (name == "crossing") crossing_stability();
        }
        return std::move(out_);
    }

private:
    static std::vector<Rational> distinct_points(std::mt19937_64& rng, int count, std::vector<Rational> avoid) {
        std::vector<Rational> pts;
        while (static_cast<int>(pts.size()) < count) {
            const Rational x = sample_rational(rng);
            const bool bad = x == Rational(1) || x == Rational(-1) ||
                             std::find(avoid.begin(), avoid.end(), x) != avoid.end() ||
                             std::find(pts.begin(), pts.end(), x) != pts.end();
            if (!bad) pts.push_back(x);
        }
        return pts;
    }

    void push(CheckReport r, const Specialization& s) {
        r.params["specialization"] = std::to_string(s.index);
        out_.push_back(std::move(r));
    }

    const HeckeRep& rep(Specialization& s) {
        if (!s.rep) s.rep = HeckeRep::build_glN(cfg_.local_dim, cfg_.sites, s.params);
        return *s.rep;
    }
    const BaxterKit& kit(Specialization& s) {
        if (!s.kit) s.kit = BaxterKit::calibrate(rep(s));
        return *s.kit;
    }
    const DualKit& duals(Specialization& s) {
        if (!s.duals) s.duals = DualKit::prepare(kit(s));
        return *s.duals;
    }

    void run_one(const std::string& suite, Specialization& s) {
        try {
            dispatch(suite, s);
        } catch (const Error& e) {
            auto params = s.params.echo();
            push(error_report(suite, params, e), s);
        }
    }

    void dispatch(const std::string& suite, Specialization& s) {
        const HeckeRep& r = rep(s);
        const int n = r.sites();
        if (suite == "relations") {
            for (const Family f : families_up_to(cfg_.family)) push(check_relations(r, f), s);
        } else if (suite == "tl") {
            if (r.local_dim() != 2 || n < 2) {
                push(info_report("tl_quotient", r, "Temperley-Lieb quotient needs local dimension 2 and two sites"), s);
                return;
            }
            CheckReport rep_tl;
            check_tl_quotient(r, rep_tl);
            push(std::move(rep_tl), s);
        } else if (suite == "murphy-commute") {
            for (const Family f : families_up_to(cfg_.family)) push(check_murphy_commutation(r, f), s);
        } else if (suite == "central") {
            for (const Family f : families_up_to(cfg_.family)) push(check_symmetric_commutant(r, f, 2), s);
        } else if (suite == "ybe") {
            push(check_ybe(r, s.points), s);
        } else if (suite == "re") {
            push(check_re(r, End::Left, s.points), s);
            push(check_re(r, End::Right, s.points), s);
        } else if (suite == "unitarity") {
            push(check_unitarity(r), s);
        } else if (suite == "crossing") {
            CheckReport c;
            c.name = "crossing";
            c.params = r.echo();
            const Crossing& x = kit(s).crossing;
            c.ratio = x.ratio.to_string();
            c.details["chi"] = x.chi.fraction();
            c.details["exponent"] = std::to_string(x.exponent);
            c.details["sign"] = std::to_string(x.sign);
            c.details["chi_half"] = x.chi_half.fraction();
            push(std::move(c), s);
        } else if (suite == "prop1") {
            for (int k = 1; k <= n; ++k) push(verify_murphy_B(r.with_sites(k)), s);
        } else if (suite == "corollary") {
            if (n < 2) {
                push(info_report("corollary", r, "needs at least two sites"), s);
                return;
            }
            for (int k = 2; k <= n; ++k) push(verify_corollary(r.with_sites(k)), s);
        } else if (suite == "prop2") {
            push(check_condition2(r, kit(s).crossing.chi), s);
            for (auto& rep_c : verify_murphy_C(duals(s))) push(std::move(rep_c), s);
            push(check_degeneration(r), s);
        } else if (suite == "hamiltonian") {
            if (n < 2) {
                push(info_report("hamiltonian", r, "needs at least two sites"), s);
                return;
            }
            push(hamiltonian(r, s.points).report, s);
        } else if (suite == "commuting-family") {
            push(check_commuting_family(r, s.u0, s.pairs), s);
        } else if (suite == "explore-generic") {
            if (n < 2) {
                push(info_report("explore_generic", r, "needs at least two sites"), s);
                return;
            }
            for (int k = 1; k < n; ++k) push(explore_generic(duals(s), k), s);
        }
    }

    void crossing_stability() {
        CheckReport r;
        r.name = "crossing_stability";
        r.params = {{"N", std::to_string(cfg_.local_dim)}};
        std::optional<std::pair<int, int>> first;
        for (auto& s : specs_) {
            if (!s.kit) continue;
            const std::pair<int, int> key{s.kit->crossing.sign, s.kit->crossing.exponent};
            if (!first) first = key;
            if (key != *first) {
                r.fail(witness("CalibrationFailure",
                               "specialization " + std::to_string(s.index) + " calibrates to a different crossing unit"));
            }
        }
        if (first) {
            r.details["sign"] = std::to_string(first->first);
            r.details["exponent"] = std::to_string(first->second);
        }
        out_.push_back(std::move(r));
    }

    const RunConfig& cfg_;
    std::vector<Specialization> specs_;
    std::vector<CheckReport> out_;
};

json report_json(const CheckReport& r, bool timings) {
    json j;
    j["name"] = r.name;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    j["details"] = r.details;
    if (r.ratio) j["ratio"] = *r.ratio;
    if (r.degrees) j["degrees"] = {r.degrees->first, r.degrees->second};
    if (r.first_failure) {
        const FailureWitness& w = *r.first_failure;
        json f{{"kind", w.kind}, {"detail", w.detail}};
        if (w.row) f["row"] = *w.row;
        if (w.col) f["col"] = *w.col;
        if (!w.lhs.empty()) f["lhs"] = w.lhs;
        if (!w.rhs.empty()) f["rhs"] = w.rhs;
        j["first_failure"] = f;
    }
    if (timings) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "relations", "tl",    "murphy-commute", "central",     "ybe",         "re",
        "unitarity", "crossing", "prop1",       "corollary",   "prop2",       "hamiltonian",
        "commuting-family", "explore-generic"};
    return names;
}

std::vector<CheckReport> run_suite(const RunConfig& cfg) {
    cfg.validate();
    return Runner(cfg).run();
}

std::string render_report(const RunConfig& cfg, const std::vector<CheckReport>& reports, bool timings) {
    json j;
    j["version"] = "1";
    j["config"] = json::parse(cfg.to_json());
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r, timings));
    return j.dump(2) + "\n";
}

void emit_report(const RunConfig& cfg, const std::vector<CheckReport>& reports, const std::filesystem::path& path,
                 bool timings) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << render_report(cfg, reports, timings);
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace hecke
