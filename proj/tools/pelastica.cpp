// Command-line front end: computes curvature roots, solves closure conditions,
// traces curves into CSV/JSON/SVG, scans the closure function, evolves (n,m)
// families across exponents, and runs the verification suite.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pelastica/curve.hpp"
#include "pelastica/elliptic.hpp"
#include "pelastica/errors.hpp"
#include "pelastica/io.hpp"
#include "pelastica/quadrature.hpp"
#include "pelastica/verify.hpp"

namespace {

using namespace pelastica;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConvergence = 4;

SpaceForm parse_space(const std::string& s) {
    if (s == "h2") return SpaceForm::hyperbolic();
    if (s == "h12") return SpaceForm::de_sitter();
    throw CLI::ValidationError("--space must be h2 or h12");
}

QuadratureConfig config_from_env() {
    QuadratureConfig cfg;
    if (const char* nodes = std::getenv("PELASTICA_NODES")) cfg.base_nodes = std::atoi(nodes);
    if (const char* tol = std::getenv("PELASTICA_TOL")) cfg.rel_tol = std::atof(tol);
    return cfg;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        io::write_file_atomic(out_path, content);
    }
}

struct CommonOpts {
    std::string space_name = "h2";
    double p = 2.0;
    std::optional<double> a;
    std::optional<int> n;
    std::optional<int> m;
    int samples = 256;
    std::string out_path;
    std::string format;
    QuadratureConfig cfg = config_from_env();
};

void add_quadrature_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--nodes", o.cfg.base_nodes, "Gauss-Legendre node budget");
    cmd->add_option("--tol", o.cfg.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--max-doublings", o.cfg.max_doublings, "node-doubling levels");
}

// trace accepts either an explicit a or a closure pair (n, m), never both
ElasticaParams resolve_params(const CommonOpts& o, SpaceForm space) {
    const bool has_a = o.a.has_value();
    const bool has_nm = o.n.has_value() || o.m.has_value();
    if (has_a == has_nm) {
        throw CLI::ValidationError("supply exactly one of --a or the pair --n/--m");
    }
    if (has_a) return {space, o.p, *o.a};
    if (!o.n.has_value() || !o.m.has_value()) {
        throw CLI::ValidationError("--n and --m must be given together");
    }
    const ClosureResult res = solve_closure(o.p, space, *o.n, *o.m, o.cfg);
    return {space, o.p, res.a_q};
}

int cmd_roots(const CommonOpts& o) {
    const SpaceForm space = parse_space(o.space_name);
    if (!o.a) throw CLI::ValidationError("roots: --a is required");
    const ElasticaParams params{space, o.p, *o.a};
    validate(params);
    const RootData roots = solve_roots(params);
    if (o.format == "json" || o.format.empty()) {
        emit(o.out_path, io::roots_json(params, roots, a_star(o.p, space)));
    } else {
        std::ostringstream os;
        os << "a_star=" << io::format_double(a_star(o.p, space))
           << " beta=" << io::format_double(roots.beta)
           << " alpha=" << io::format_double(roots.alpha)
           << " kappa_c=" << io::format_double(roots.kappa_c) << '\n';
        emit(o.out_path, os.str());
    }
    return kExitOk;
}

int cmd_close(const CommonOpts& o) {
    const SpaceForm space = parse_space(o.space_name);
    if (!o.n || !o.m) throw CLI::ValidationError("close: --n and --m are required");
    ClosureOptions copts;
    copts.trace_samples = o.samples;
    const ClosureResult res = solve_closure(o.p, space, *o.n, *o.m, o.cfg, copts);
    if (o.format == "csv") {
        emit(o.out_path, io::closure_csv(res, space, o.p));
    } else {
        emit(o.out_path, io::closure_json(res, space, o.p));
    }
    return kExitOk;
}

int cmd_trace(const CommonOpts& o, int periods) {
    const SpaceForm space = parse_space(o.space_name);
    const ElasticaParams params = resolve_params(o, space);
    const int m = o.m.value_or(periods);
    const Trace tr = trace(params, m, o.samples, o.cfg);
    if (o.format == "svg") {
        if (o.out_path.empty()) throw CLI::ValidationError("trace --format svg needs --out");
        emit(o.out_path, io::trace_svg(tr));
    } else if (o.format == "json") {
        emit(o.out_path, io::trace_json(tr));
    } else {
        emit(o.out_path, io::trace_csv(tr));
    }
    return kExitOk;
}

int cmd_scan(const CommonOpts& o, int grid) {
    const SpaceForm space = parse_space(o.space_name);
    const ScanResult scan = monotonicity_scan(o.p, space, grid, o.cfg);
    std::vector<io::ScanRow> rows;
    rows.reserve(scan.points.size());
    for (const auto& pt : scan.points) {
        io::ScanRow row;
        row.a = pt.a;
        row.lambda = pt.lambda;
        row.energy_m1 = energy({space, o.p, pt.a}, 1, o.cfg);
        row.decreasing = pt.decreasing_from_prev;
        rows.push_back(row);
    }
    if (o.format == "json") {
        emit(o.out_path, io::scan_json(rows, o.p, space));
    } else {
        emit(o.out_path, io::scan_csv(rows));
    }
    return kExitOk;
}

int cmd_evolve(const CommonOpts& o, const std::vector<double>& p_list) {
    const SpaceForm space = parse_space(o.space_name);
    if (!o.n || !o.m) throw CLI::ValidationError("evolve: --n and --m are required");
    if (p_list.empty()) throw CLI::ValidationError("evolve: --p-list is required");
    ClosureOptions copts;
    copts.trace_samples = o.samples;
    const auto family = family_evolution(space, *o.n, *o.m, p_list, o.cfg, copts);
    if (o.format == "svg") {
        if (o.out_path.empty()) throw CLI::ValidationError("evolve --format svg needs --out");
        emit(o.out_path, io::family_svg(family, space));
    } else if (o.format == "json") {
        emit(o.out_path, io::family_json(family, space, *o.n, *o.m));
    } else {
        emit(o.out_path, io::family_csv(family));
    }
    for (const auto& entry : family) {
        if (!entry.error.empty()) return kExitConvergence;
    }
    return kExitOk;
}

int cmd_verify(const CommonOpts& o, bool perturb) {
    const SpaceForm space = parse_space(o.space_name);
    const double a = o.a.value_or(space.epsilon == 0 ? -1.0 : -1.0);
    const ElasticaParams params{space, o.p, a};
    validate(params);

    std::vector<VerificationReport> reports;
    auto profile = uniform_profile(params, 4096, 1);
    if (perturb) {
        for (auto& ps : profile) ps.kappa *= 1.01;
    }
    reports.push_back(el_residual(profile, params));
    reports.push_back(conservation_residual(profile, params));
    const Trace tr = trace(params, 1, o.samples, o.cfg);
    reports.push_back(momentum(tr));
    reports.push_back(killing_norm(tr));
    if (!perturb) reports.push_back(limit_checks(o.p, space, o.cfg));

    if (o.format == "json") {
        emit(o.out_path, io::reports_json(reports));
    } else {
        emit(o.out_path, io::reports_table(reports));
    }
    if (perturb) {
        // negative controls must fail
        const bool controls_failed = !reports[0].passed && !reports[1].passed;
        return controls_failed ? kExitOk : kExitConvergence;
    }
    for (const auto& r : reports) {
        if (!r.passed) return kExitConvergence;
    }
    return kExitOk;
}

int cmd_circle(const CommonOpts& o) {
    const SpaceForm space = parse_space(o.space_name);
    const CircleData c = circle(o.p, space);
    emit(o.out_path, io::circle_json(o.p, space, c));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-elastic curves in the hyperbolic plane and de Sitter 2-space"};
    app.require_subcommand(1);

    CommonOpts o;
    std::vector<double> p_list;
    int grid = 200;
    int periods = 1;
    bool perturb = false;

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--space", o.space_name, "quadric: h2 or h12")->required();
        cmd->add_option("--p", o.p, "exponent of the energy density")->required();
        cmd->add_option("--a", [&o](const std::vector<std::string>& v) {
            o.a = std::stod(v.front());
            return true;
        }, "integration constant");
        cmd->add_option("--n", [&o](const std::vector<std::string>& v) {
            o.n = std::stoi(v.front());
            return true;
        }, "winding number");
        cmd->add_option("--m", [&o](const std::vector<std::string>& v) {
            o.m = std::stoi(v.front());
            return true;
        }, "lobe count / symmetry order");
        cmd->add_option("--samples", o.samples, "samples per half-period");
        cmd->add_option("--out", o.out_path, "output path (stdout when omitted)");
        if (with_format) cmd->add_option("--format", o.format, "csv, json or svg");
        add_quadrature_flags(cmd, o);
    };

    CLI::App* roots = app.add_subcommand("roots", "curvature extrema and window");
    add_common(roots);
    CLI::App* close = app.add_subcommand("close", "solve the closure condition for (n, m)");
    add_common(close);
    CLI::App* trace_cmd = app.add_subcommand("trace", "trace a curve over m periods");
    add_common(trace_cmd);
    trace_cmd->add_option("--periods", periods, "periods when --a is given directly");
    CLI::App* scan = app.add_subcommand("scan", "tabulate Lambda_p and the energy over (a_*, 0)");
    add_common(scan);
    scan->add_option("--grid", grid, "grid size");
    CLI::App* evolve = app.add_subcommand("evolve", "family of closed curves across exponents");
    add_common(evolve);
    evolve->add_option("--p-list", p_list, "exponents for the family")->delimiter(',');
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify);
    verify->add_flag("--perturb", perturb, "run negative controls (checks must fail)");
    CLI::App* circle_cmd = app.add_subcommand("circle", "constant-curvature solution data");
    add_common(circle_cmd);

    try {
        app.parse(argc, argv);
        if (roots->parsed()) return cmd_roots(o);
        if (close->parsed()) return cmd_close(o);
        if (trace_cmd->parsed()) return cmd_trace(o, periods);
        if (scan->parsed()) return cmd_scan(o, grid);
        if (evolve->parsed()) return cmd_evolve(o, p_list);
        if (verify->parsed()) return cmd_verify(o, perturb);
        if (circle_cmd->parsed()) return cmd_circle(o);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    } catch (const BracketError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
