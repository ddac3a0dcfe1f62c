// Acceptance driver: one PASS/FAIL line per criterion. Exit status is 0 when
// every failing check is listed in kKnownFailures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/suite.hpp"
#include "hecke/transfer.hpp"

namespace {

using namespace hecke;

// Checks that fail for reasons recorded in the project notes and README.
const std::set<std::string> kKnownFailures{"prop2_t_plus_opposite"};

struct Tally {
    int checks = 0;
    std::vector<std::string> failures;

    void add(const CheckReport& r, const std::string& where) {
        ++checks;
        if (r.failed()) {
            std::string msg = r.name + " " + where;
            if (r.first_failure) msg += ": " + r.first_failure->kind + " " + r.first_failure->detail;
            failures.push_back(msg);
            names.insert(r.name);
        }
    }
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            failures.push_back(what);
            names.insert(what);
        }
    }
    std::set<std::string> names;
};

std::vector<HeckeParams> specializations(int count = 3) {
    RunConfig cfg;
    cfg.specializations = count;
    return sample_params(cfg);
}

std::string where(int N, int n, std::size_t s) {
    return "(N=" + std::to_string(N) + " n=" + std::to_string(n) + " specialization " + std::to_string(s) + ")";
}

std::vector<Rational> points(std::mt19937_64& rng, int count) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        const Rational x = sample_rational(rng);
        if (x != Rational(1) && x != Rational(-1) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
}

void c1(Tally& t) {
    const auto ps = specializations();
    for (const auto& [N, max_n] : {std::pair{2, 6}, std::pair{3, 4}}) {
        for (int n = 1; n <= max_n; ++n) {
            for (std::size_t s = 0; s < ps.size(); ++s) {
                const HeckeRep rep = HeckeRep::build_glN(N, n, ps[s]);
                for (const Family f : {Family::A, Family::B, Family::C}) t.add(check_relations(rep, f), where(N, n, s));
            }
        }
    }
}

void c2(Tally& t) {
    const auto ps = specializations();
    std::mt19937_64 rng(11);
    for (const int N : {2, 3}) {
        std::set<std::pair<int, int>> units;
        for (std::size_t s = 0; s < ps.size(); ++s) {
            const HeckeRep rep = HeckeRep::build_glN(N, 2, ps[s]);
            const auto pts = points(rng, 3);
            t.add(check_ybe(rep, pts), where(N, 2, s));
            t.add(check_re(rep, End::Left, pts), where(N, 2, s));
            t.add(check_re(rep, End::Right, pts), where(N, 2, s));
            t.add(check_unitarity(rep), where(N, 2, s));
            try {
                const Crossing c = calibrate_crossing(rep);
                t.expect(crossing_ratio(rep, c.chi).has_value(), "crossing " + where(N, 2, s));
                units.insert({c.sign, c.exponent});
            } catch (const CalibrationFailure& e) {
                t.expect(false, std::string("calibrate_crossing ") + e.what());
            }
        }
        t.expect(units.size() == 1, "crossing unit not stable for N=" + std::to_string(N));
    }
}

void one_boundary(Tally& t, bool corollary) {
    const auto ps = specializations();
    for (const auto& [N, max_n] : {std::pair{2, 6}, std::pair{3, 4}}) {
        for (int n = 2; n <= max_n; ++n) {
            for (std::size_t s = 0; s < ps.size(); ++s) {
                const HeckeRep rep = HeckeRep::build_glN(N, n, ps[s]);
                t.add(corollary ? verify_corollary(rep) : verify_murphy_B(rep), where(N, n, s));
            }
        }
    }
}

void c5(Tally& t) {
    const auto ps = specializations();
    for (const auto& [N, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        for (std::size_t s = 0; s < ps.size(); ++s) {
            const BaxterKit kit = BaxterKit::calibrate(HeckeRep::build_glN(N, n, ps[s]));
            t.add(check_condition2(kit.rep, kit.crossing.chi), where(N, n, s));
            for (const auto& r : verify_murphy_C(DualKit::prepare(kit))) t.add(r, where(N, n, s));
        }
    }
}

void c6(Tally& t) {
    const auto ps = specializations();
    for (const auto& [N, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        for (std::size_t s = 0; s < ps.size(); ++s) {
            t.add(check_degeneration(HeckeRep::build_glN(N, n, ps[s])), where(N, n, s));
        }
    }
}

void c7(Tally& t) {
    const auto ps = specializations();
    for (const auto& [N, max_n] : {std::pair{2, 4}, std::pair{3, 3}}) {
        for (int n = 1; n <= max_n; ++n) {
            for (std::size_t s = 0; s < ps.size(); ++s) {
                const HeckeRep rep = HeckeRep::build_glN(N, n, ps[s]);
                for (const Family f : {Family::A, Family::B, Family::C}) {
                    t.add(check_murphy_commutation(rep, f), where(N, n, s));
                }
                t.add(check_symmetric_commutant(rep, Family::B, 2), where(N, n, s));
                t.add(check_symmetric_commutant(rep, Family::C, 1), where(N, n, s));
            }
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void c8(Tally& t) {
    const auto ps = specializations();
    for (int n = 2; n <= 4; ++n) {
        for (std::size_t s = 0; s < ps.size(); ++s) {
            CheckReport r;
            const auto k = check_tl_quotient(HeckeRep::build_glN(2, n, ps[s]), r);
            t.add(r, where(2, n, s));
            t.expect(k.has_value(), "tl constants " + where(2, n, s));
        }
    }
    const std::string golden = read_file(HECKE_GOLDEN_DIR "/default_report.json");
    t.expect(golden.find("\"kappa_minus\"") != std::string::npos && golden.find("\"kappa_plus\"") != std::string::npos,
             "kappa constants missing from the golden report");
}

void c9(Tally& t) {
    const auto ps = specializations();
    std::mt19937_64 rng(29);
    for (int n = 1; n <= 4; ++n) {
        for (std::size_t s = 0; s < ps.size(); ++s) {
            const HeckeRep rep = HeckeRep::build_glN(2, n, ps[s]);
            const auto xs = points(rng, 7);
            const std::vector<std::pair<Rational, Rational>> pairs{{xs[0], xs[1]}, {xs[2], xs[3]}, {xs[4], xs[5]}};
            t.add(check_commuting_family(rep, xs[6], pairs), where(2, n, s));
            if (n >= 2) t.add(hamiltonian(rep, points(rng, 3)).report, where(2, n, s));
        }
    }
}

void c10(Tally& t) {
    const RunConfig cfg;
    const std::string text = render_report(cfg, run_suite(cfg));
    t.expect(text == read_file(HECKE_GOLDEN_DIR "/default_report.json"), "default report differs from golden");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
        {"relations (A/B/C) N=2 n<=6, N=3 n<=4", c1},
        {"Yang-Baxter, reflection, unitarity, crossing", c2},
        {"one-boundary transfer edges (B type)", [](Tally& t) { one_boundary(t, false); }},
        {"trivial boundary edges (A type)", [](Tally& t) { one_boundary(t, true); }},
        {"two-boundary transfer edges (C type)", c5},
        {"degeneration to one boundary", c6},
        {"Murphy commutation and central sums", c7},
        {"Temperley-Lieb quotient at N=2", c8},
        {"commuting transfer matrices and Hamiltonian", c9},
        {"default suite matches golden report", c10},
    };
    bool ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        std::string crash;
        try {
            criteria[i].second(t);
        } catch (const std::exception& e) {
            crash = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = t.failures.empty() && crash.empty();
        bool known = crash.empty() && !pass;
        for (const auto& n : t.names) known = known && kKnownFailures.count(n) > 0;
        std::printf("%s criterion %zu: %s (%d checks, %zu failed, %.2fs)%s\n", pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), t.checks, t.failures.size(), secs, known ? " [known failure]" : "");
        if (!crash.empty()) std::printf("    error: %s\n", crash.c_str());
        for (std::size_t k = 0; k < t.failures.size() && k < 12; ++k) std::printf("    %s\n", t.failures[k].c_str());
        if (!pass && !known) ok = false;
    }
    return ok ? 0 : 1;
}
