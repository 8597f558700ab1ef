// hecke: tableaux listings, coefficient tables and verification suites.
//
// Exit codes: 0 success (all checks pass), 1 some check failed,
// 2 configuration or parameter error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/hecke.hpp"
#include "hecke/report_io.hpp"

namespace {

constexpr int exit_fail = 1;
constexpr int exit_config = 2;

struct RunConfig {
    std::string variant = "nondeg";
    int ell = 1;
    int n = 3;
    std::string q;
    std::string Q;
    std::string u;
    std::string suites = "all";
    std::string format;
    std::string output;
    unsigned jobs = 0;
    bool full = false;
    bool prime = false;
    bool force_triangular = false;
    std::uint64_t triangular_limit = hecke::VerifyOptions{}.triangular_limit;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_params) {
    cmd->add_option("--ell", cfg.ell, "Level l (number of components)")->check(CLI::Range(1, 16));
    cmd->add_option("--n", cfg.n, "Rank n")->check(CLI::Range(0, 12));
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--output,-o", cfg.output, "Write to this file instead of stdout");
    if (!with_params) return;
    cmd->add_option("--variant", cfg.variant, "nondeg or deg")->check(CLI::IsMember({"nondeg", "deg"}));
    cmd->add_option("--q", cfg.q, "Hecke parameter, p or p/q");
    cmd->add_option("--Q", cfg.Q, "Cyclotomic parameters Q_1,..,Q_l");
    cmd->add_option("--u", cfg.u, "Degenerate parameters u_1,..,u_l");
}

hecke::Params build_params(const RunConfig& cfg) {
    using namespace hecke;
    Variant v = parse_variant(cfg.variant);
    Params p = Params::defaults(v, cfg.ell, cfg.n);
    try {
        if (v == Variant::nondegenerate) {
            if (!cfg.u.empty()) throw ConfigError("--u applies to the degenerate variant only");
            Scalar q = cfg.q.empty() ? p.nondegenerate().q : parse_scalar(cfg.q);
            std::vector<Scalar> Q;
            if (cfg.Q.empty()) {
                if (q == 0) throw ConfigError("q must be nonzero");
                Q = Params::generated(v, cfg.ell, cfg.n, q).nondegenerate().Q;
            } else {
                Q = parse_scalar_list(cfg.Q);
            }
            if (static_cast<int>(Q.size()) != cfg.ell)
                throw ConfigError("--Q needs " + std::to_string(cfg.ell) + " values, got " + std::to_string(Q.size()));
            p = Params(NonDegenerateParams{q, Q, cfg.n});
        } else {
            if (!cfg.q.empty() || !cfg.Q.empty()) throw ConfigError("--q/--Q apply to the nondeg variant only");
            if (!cfg.u.empty()) {
                auto u = parse_scalar_list(cfg.u);
                if (static_cast<int>(u.size()) != cfg.ell)
                    throw ConfigError("--u needs " + std::to_string(cfg.ell) + " values, got " +
                                      std::to_string(u.size()));
                p = Params(DegenerateParams{u, cfg.n});
            }
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (auto why = p.violation()) throw ConfigError("parameters rejected: " + *why);
    return p;
}

/// Runs `body` against stdout or the --output file.
template <class Body>
void emit(const RunConfig& cfg, Body&& body) {
    if (cfg.output.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw ConfigError("cannot open " + cfg.output + " for writing");
    body(out);
}

int cmd_tableaux(const RunConfig& cfg) {
    std::string fmt = cfg.format.empty() ? "text" : cfg.format;
    if (fmt == "csv") throw ConfigError("tableaux supports json or text output");
    emit(cfg, [&](std::ostream& os) {
        if (fmt == "json") os << hecke::tableaux_json(cfg.ell, cfg.n, cfg.full).dump(2) << '\n';
        else hecke::write_tableaux_text(os, cfg.ell, cfg.n, cfg.full);
    });
    return 0;
}

int cmd_gamma(const RunConfig& cfg) {
    auto p = build_params(cfg);
    auto table = cfg.prime ? hecke::gamma_prime_table(p) : hecke::gamma_table(p);
    std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    emit(cfg, [&](std::ostream& os) {
        if (fmt == "json") os << hecke::table_json(table, p).dump(2) << '\n';
        else if (fmt == "csv") hecke::write_table_csv(os, table);
        else hecke::write_table_text(os, table);
    });
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    auto p = build_params(cfg);
    std::vector<std::string> suites;
    try {
        suites = hecke::parse_suite_list(cfg.suites);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    hecke::VerifyOptions opts;
    opts.jobs = cfg.jobs > 0 ? cfg.jobs : hecke::default_jobs();
    opts.force_triangular = cfg.force_triangular;
    opts.triangular_limit = cfg.triangular_limit;
    auto report = hecke::run_verification(p, suites, opts);
    std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    emit(cfg, [&](std::ostream& os) {
        if (fmt == "json") os << hecke::report_json(report).dump(2) << '\n';
        else if (fmt == "csv") hecke::write_report_csv(os, report);
        else hecke::write_report_text(os, report);
    });
    if (!cfg.output.empty() || fmt == "json") {
        for (const auto& s : report.suites)
            std::cerr << (s.ok() ? "PASS " : "FAIL ") << s.name << ' ' << s.passed() << '/' << s.total() << '\n';
    }
    return report.ok() ? 0 : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seminormal bases of cyclotomic Hecke algebras: tableaux, gamma tables, verification"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* tab = app.add_subcommand("tableaux", "List multipartitions, dominance and tableau counts");
    add_common(tab, cfg, false);
    tab->add_flag("--full", cfg.full, "Also list every standard tableau");

    auto* gam = app.add_subcommand("gamma", "Print the gamma (r) table, or gamma' (r') with --prime");
    add_common(gam, cfg, true);
    gam->add_flag("--prime", cfg.prime, "Primed table: the recursion at the primed parameters");

    auto* ver = app.add_subcommand("verify", "Run verification suites");
    add_common(ver, cfg, true);
    ver->add_option("--suites", cfg.suites, "Comma-separated suite names, or all");
    ver->add_option("--jobs,-j", cfg.jobs, "Worker threads (default: HECKE_JOBS or hardware concurrency)");
    ver->add_flag("--force-triangular", cfg.force_triangular, "Run the triangular suite beyond its size limit");
    ver->add_option("--triangular-limit", cfg.triangular_limit, "Largest l^n n! for the triangular suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (tab->parsed()) return cmd_tableaux(cfg);
        if (gam->parsed()) return cmd_gamma(cfg);
        return cmd_verify(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const hecke::ParameterError& e) {
        std::cerr << "error: parameters rejected: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
}
