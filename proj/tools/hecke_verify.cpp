#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hecke/errors.hpp"
#include "hecke/suite.hpp"
#include "hecke/transfer.hpp"

namespace {

using namespace hecke;

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> local_dim;
    std::optional<int> sites;
};

void add_common(CLI::App* app, CommonOpts& o) {
    app->add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app->add_option("--seed", o.seed, "Seed for parameter sampling (overrides config and HECKE_SEED)");
    app->add_option("--local-dim,-N", o.local_dim, "Local dimension N (2 or 3)");
    app->add_option("--sites", o.sites, "Number of sites");
}

RunConfig resolve(const CommonOpts& o) {
    RunConfig cfg = o.config_path.empty() ? RunConfig{} : RunConfig::load(o.config_path);
    cfg.apply_env();
    if (o.seed) cfg.seed = *o.seed;
    if (o.local_dim) cfg.local_dim = *o.local_dim;
    if (o.sites) cfg.sites = *o.sites;
    cfg.validate();
    return cfg;
}

HeckeRep first_rep(const RunConfig& cfg) {
    return HeckeRep::build_glN(cfg.local_dim, cfg.sites, sample_params(cfg).front());
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
}

int run_suite_cmd(const CommonOpts& o, const std::string& out_path, bool timings) {
    RunConfig cfg = resolve(o);
    if (!out_path.empty()) cfg.output = out_path;
    const auto reports = run_suite(cfg);
    int failures = 0;
    for (const auto& r : reports) {
        std::cerr << to_string(r.status) << "  " << r.name;
        if (auto it = r.params.find("specialization"); it != r.params.end()) std::cerr << " [specialization " << it->second << "]";
        if (auto it = r.params.find("sites"); it != r.params.end()) std::cerr << " [n=" << it->second << "]";
        if (r.first_failure) std::cerr << "  " << r.first_failure->kind << ": " << r.first_failure->detail;
        std::cerr << '\n';
        failures += r.failed() ? 1 : 0;
    }
    write_text(render_report(cfg, reports, timings), cfg.output);
    std::cerr << reports.size() << " reports, " << failures << " failed\n";
    return failures == 0 ? 0 : 1;
}

int murphy_cmd(const CommonOpts& o, const std::string& family, int index, bool inverse, const std::string& out) {
    CommonOpts adj = o;
    if (!adj.sites) adj.sites = std::max(index + 1, 2);
    const RunConfig cfg = resolve(adj);
    const HeckeRep rep = first_rep(cfg);
    const Family f = parse_family(family);
    const PolyMatrix j = inverse ? murphy_inverse(rep, f, index) : murphy(rep, f, index);
    write_text(to_json(j) + "\n", out);
    return 0;
}

int dump_cmd(const CommonOpts& o, const std::string& object, const std::string& point, const std::string& out) {
    const RunConfig cfg = resolve(o);
    const HeckeRep rep = first_rep(cfg);
    const EvalPoint p = point == "opposite" ? EvalPoint::Opposite : EvalPoint::Main;
    PolyMatrix m;
    if (object == "t_open") {
        m = build_t_one_boundary(rep).factorized;
    } else {
        const DualKit kit = DualKit::prepare(BaxterKit::calibrate(rep));
        m = build_t_two_boundary(kit, object == "t_minus" ? TwoBoundaryKind::Minus : TwoBoundaryKind::Plus, p).direct;
    }
    write_text(to_json(m) + "\n", out);
    return 0;
}

int calibrate_cmd(const CommonOpts& o) {
    const RunConfig cfg = resolve(o);
    const Crossing c = calibrate_crossing(first_rep(cfg));
    std::cout << "chi = " << c.chi.fraction() << " = " << (c.sign < 0 ? "-" : "") << "q^" << c.exponent << '\n'
              << "chi_half = " << c.chi_half.fraction() << '\n'
              << "ratio = " << c.ratio.to_string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Hecke algebra transfer matrix identities"};
    app.require_subcommand(1);

    CommonOpts suite_o, murphy_o, dump_o, cal_o;
    std::string suite_out;
    bool timings = false;
    auto* suite = app.add_subcommand("suite", "Run the verification suites and emit a JSON report");
    add_common(suite, suite_o);
    suite->add_option("--out", suite_out, "Report path (stdout when omitted)");
    suite->add_flag("--timings", timings, "Include elapsed_ms in the report");

    std::string family = "B";
    int index = 1;
    bool inverse = false;
    std::string murphy_out;
    auto* murphy = app.add_subcommand("murphy", "Dump a Murphy element");
    add_common(murphy, murphy_o);
    murphy->add_option("--family", family, "A, B or C")->check(CLI::IsMember({"A", "B", "C"}));
    murphy->add_option("--n", index, "Index of the element")->check(CLI::NonNegativeNumber);
    murphy->add_flag("--inverse", inverse, "Dump the inverse instead");
    murphy->add_option("--out", murphy_out, "Output path (stdout when omitted)");

    std::string object = "t_minus";
    std::string point = "main";
    std::string dump_out;
    auto* dump = app.add_subcommand("dump", "Dump a transfer matrix");
    add_common(dump, dump_o);
    dump->add_option("--object", object, "t_minus, t_plus or t_open")
        ->check(CLI::IsMember({"t_minus", "t_plus", "t_open"}));
    dump->add_option("--point", point, "main or opposite (two-boundary objects)")
        ->check(CLI::IsMember({"main", "opposite"}));
    dump->add_option("--out", dump_out, "Output path (stdout when omitted)");

    auto* cal = app.add_subcommand("calibrate", "Find the crossing unit");
    add_common(cal, cal_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*suite) return run_suite_cmd(suite_o, suite_out, timings);
        if (*murphy) return murphy_cmd(murphy_o, family, index, inverse, murphy_out);
        if (*dump) return dump_cmd(dump_o, object, point, dump_out);
        if (*cal) return calibrate_cmd(cal_o);
    } catch (const hecke::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
