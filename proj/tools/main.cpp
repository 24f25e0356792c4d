// iva: approximation toolkit for continuous interval-valued functions on a
// compact real interval. Subcommands build the dense (partition-of-unity)
// approximant, the node-sampled modulus-bounded approximant, or a sigmoid
// interval network, verify the algebraic law suites, and export plot-ready
// CSV data.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iva/bump.hpp"
#include "iva/errors.hpp"
#include "iva/function.hpp"
#include "iva/inn.hpp"
#include "iva/io.hpp"
#include "iva/jackson.hpp"
#include "iva/laws.hpp"
#include "iva/sw.hpp"

namespace {

using nlohmann::json;

struct FunctionArgs {
    std::string fn;
    std::string lower_expr;
    std::string upper_expr;
    std::vector<double> domain;
    double lipschitz = 0.0;
};

void add_function_flags(CLI::App* cmd, FunctionArgs& args) {
    cmd->add_option("--fn", args.fn, "catalog function name");
    cmd->add_option("--lower", args.lower_expr, "lower endpoint expression");
    cmd->add_option("--upper", args.upper_expr, "upper endpoint expression");
    cmd->add_option("--domain", args.domain, "domain a,b for expression functions")
        ->delimiter(',')
        ->expected(2);
    cmd->add_option("--lipschitz", args.lipschitz,
                    "Lipschitz bound for expression functions");
}

iva::IntervalFunction resolve_function(const FunctionArgs& args) {
    if (!args.fn.empty())
        return iva::catalog_function(args.fn);
    if (args.lower_expr.empty() || args.upper_expr.empty())
        throw iva::DomainError("need --fn NAME or --lower/--upper expressions");
    const double a = args.domain.size() == 2 ? args.domain[0] : 0.0;
    const double b = args.domain.size() == 2 ? args.domain[1] : 1.0;
    std::optional<double> lip;
    if (args.lipschitz > 0.0)
        lip = args.lipschitz;
    return iva::parse_function(args.lower_expr, args.upper_expr, a, b, lip);
}

std::size_t default_grid() {
    if (const char* env = std::getenv("IVA_GRID_DEFAULT")) {
        const long v = std::atol(env);
        if (v >= 11)
            return static_cast<std::size_t>(v);
    }
    return 1001;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw iva::DomainError("cannot open output file " + path);
    out << text;
}

void emit_report(const json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty())
        write_text(out_path, text);
}

std::string overlay_csv(const iva::IntervalFunction& f, const iva::Grid& grid,
                        const std::function<iva::Interval(double)>& g) {
    std::ostringstream csv;
    csv << "x,f_lo,f_hi,g_lo,g_hi,dh\n";
    for (double x : grid.points) {
        const iva::Interval fx = iva::eval(f, x);
        const iva::Interval gx = g(x);
        csv << iva::fmt_double(x) << ',' << iva::fmt_double(fx.lo()) << ','
            << iva::fmt_double(fx.hi()) << ',' << iva::fmt_double(gx.lo()) << ','
            << iva::fmt_double(gx.hi()) << ','
            << iva::fmt_double(iva::hausdorff(fx, gx)) << '\n';
    }
    return csv.str();
}

struct ApproximateArgs {
    std::string method;
    FunctionArgs fn;
    double eps = 0.1;
    std::size_t n = 8;
    std::size_t grid_n = default_grid();
    std::string out;
    std::string csv;
    std::string model;
    double steepness = 0.0;
    std::size_t max_terms = 1024;
};

int run_approximate(const ApproximateArgs& args) {
    const iva::IntervalFunction f = resolve_function(args.fn);
    const iva::Grid grid =
        iva::Grid::uniform(f.domain_lo, f.domain_hi, args.grid_n);

    json doc = {
        {"schema_version", 1},
        {"command", "approximate"},
        {"method", args.method},
        {"fn", f.name},
        {"eps", args.eps},
        {"grid", args.grid_n},
    };

    try {
        bool ok = false;
        if (args.method == "sw") {
            const iva::Approximant g = iva::sw_approximant(f, args.eps, grid);
            doc["report"] = {
                {"m", g.report.m},
                {"delta", g.report.delta},
                {"eps_prime", g.report.eps_prime},
                {"M", g.report.big_m},
                {"certified_error", g.report.certified_error},
                {"grid_error", g.report.grid_error},
                {"certified", g.report.certified},
            };
            ok = g.report.certified_error < args.eps;
            if (!args.csv.empty())
                write_text(args.csv, overlay_csv(f, grid, [&](double x) {
                               return iva::eval_approximant(g, x);
                           }));
        } else if (args.method == "jackson") {
            const iva::JacksonApproximant g =
                iva::build_jackson(f, args.n, args.eps, grid);
            doc["report"] = {
                {"n", g.report.n},
                {"direction", g.report.direction},
                {"delta", g.report.delta},
                {"eps_prime", g.report.eps_prime},
                {"M", g.report.big_m},
                {"certified_error", g.report.certified_error},
                {"bound_2omega", g.report.bound_2omega},
                {"grid_error", g.report.grid_error},
                {"omega_source", g.report.omega_source},
            };
            ok = g.report.certified_error <= g.report.bound_2omega + args.eps;
            if (!args.csv.empty())
                write_text(args.csv, overlay_csv(f, grid, [&](double x) {
                               return iva::eval_jackson(g, x);
                           }));
        } else if (args.method == "inn") {
            iva::FitConfig config;
            config.steepness = args.steepness;
            config.max_terms = args.max_terms;
            const auto [net, fit] = iva::fit_network(f, args.eps, config, grid);
            json budgets = json::array();
            for (const iva::UnitFit& u : fit.units)
                budgets.push_back({{"budget", u.budget},
                                   {"error", u.grid_error},
                                   {"terms", u.terms},
                                   {"weight_norm", u.weight_norm}});
            doc["report"] = {
                {"units", net.units.size()},
                {"dropped_units", fit.dropped_units},
                {"decomposition_error", fit.decomposition_error},
                {"composition_bound", fit.composition_bound},
                {"grid_error", fit.grid_error},
                {"budgets_met", fit.budgets_met},
                {"unit_fits", budgets},
            };
            ok = fit.budgets_met && fit.grid_error < args.eps &&
                 fit.composition_bound < args.eps;
            if (!args.model.empty())
                write_text(args.model, iva::network_to_json(net) + "\n");
            if (!args.csv.empty())
                write_text(args.csv, overlay_csv(f, grid, [&, &net = net](double x) {
                               return iva::eval_network(net, x);
                           }));
        } else {
            throw iva::DomainError("unknown method '" + args.method + "'");
        }
        doc["status"] = ok ? "ok" : "failed";
        emit_report(doc, args.out);
        return ok ? 0 : 2;
    } catch (const iva::NotMonotone& e) {
        doc["status"] = "failed";
        doc["diagnostic"] = std::string("NotMonotone: ") + e.what();
        emit_report(doc, args.out);
        return 2;
    } catch (const iva::CoverTooLarge& e) {
        doc["status"] = "failed";
        doc["diagnostic"] = std::string("CoverTooLarge: ") + e.what();
        emit_report(doc, args.out);
        return 2;
    } catch (const iva::FitBudgetExceeded& e) {
        doc["status"] = "failed";
        doc["diagnostic"] = std::string("FitBudgetExceeded: ") + e.what();
        doc["best_error"] = e.best_error;
        emit_report(doc, args.out);
        return 2;
    } catch (const iva::BudgetInfeasible& e) {
        doc["status"] = "failed";
        doc["diagnostic"] = std::string("BudgetInfeasible: ") + e.what();
        emit_report(doc, args.out);
        return 2;
    } catch (const iva::SearchExhausted& e) {
        doc["status"] = "failed";
        doc["diagnostic"] = std::string("SearchExhausted: ") + e.what();
        emit_report(doc, args.out);
        return 2;
    }
}

int run_verify(std::uint64_t seed, const std::string& out_path) {
    const std::string report = iva::verify_report_json(seed);
    std::cout << report << "\n";
    if (!out_path.empty())
        write_text(out_path, report + "\n");
    const json doc = json::parse(report);
    return doc.at("all_passed").get<bool>() ? 0 : 3;
}

int run_synth_bump(double a, double b, double delta, const std::string& out) {
    const iva::BumpPoly p = iva::step_poly(a, b, delta);
    const std::size_t checked = 10001;
    double violation = 0.0;
    for (std::size_t i = 0; i < checked; ++i) {
        const double x = static_cast<double>(i) / (checked - 1);
        const double v = iva::eval_bump(p, x);
        if (x <= a)
            violation = std::max(violation, (1.0 - delta) - v);
        if (x >= b)
            violation = std::max(violation, v - delta);
    }
    const json doc = {
        {"schema_version", 1}, {"command", "synth-bump"},
        {"a", a},              {"b", b},
        {"delta", delta},      {"m", p.m},
        {"n", p.n},            {"checked_points", checked},
        {"max_violation", violation},
    };
    emit_report(doc, out);
    return violation > 0.0 ? 2 : 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw iva::DomainError("cannot open file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_eval_inn(const std::string& model_path, double x) {
    const iva::IntervalNetwork net = iva::network_from_json(read_file(model_path));
    std::cout << iva::to_string(iva::eval_network(net, x)) << "\n";
    return 0;
}

int run_export_sweep(const FunctionArgs& fn_args, double eps,
                     const std::vector<std::size_t>& ns, std::size_t grid_n,
                     const std::string& out) {
    const iva::IntervalFunction f = resolve_function(fn_args);
    const iva::Grid grid = iva::Grid::uniform(f.domain_lo, f.domain_hi, grid_n);
    std::ostringstream csv;
    csv << "n,certified_error,bound_2omega\n";
    for (std::size_t n : ns) {
        const iva::JacksonApproximant g = iva::build_jackson(f, n, eps, grid);
        csv << n << ',' << iva::fmt_double(g.report.certified_error) << ','
            << iva::fmt_double(g.report.bound_2omega) << '\n';
    }
    if (out.empty())
        std::cout << csv.str();
    else
        write_text(out, csv.str());
    return 0;
}

int run_export_overlay(const FunctionArgs& fn_args, const std::string& model_path,
                       std::size_t grid_n, const std::string& out) {
    const iva::IntervalFunction f = resolve_function(fn_args);
    const iva::IntervalNetwork net = iva::network_from_json(read_file(model_path));
    const iva::Grid grid = iva::Grid::uniform(f.domain_lo, f.domain_hi, grid_n);
    const std::string csv = overlay_csv(
        f, grid, [&](double x) { return iva::eval_network(net, x); });
    if (out.empty())
        std::cout << csv;
    else
        write_text(out, csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval-valued function approximation toolkit"};
    app.require_subcommand(1);

    ApproximateArgs approx;
    CLI::App* cmd_approx =
        app.add_subcommand("approximate", "build an approximant and report errors");
    cmd_approx->add_option("method", approx.method, "sw | jackson | inn")
        ->required();
    add_function_flags(cmd_approx, approx.fn);
    cmd_approx->add_option("--eps", approx.eps, "target error budget");
    cmd_approx->add_option("--n", approx.n, "node count (jackson)");
    cmd_approx->add_option("--grid", approx.grid_n, "grid resolution");
    cmd_approx->add_option("--out", approx.out, "report JSON path");
    cmd_approx->add_option("--csv", approx.csv, "sample CSV path");
    cmd_approx->add_option("--model", approx.model, "network JSON path (inn)");
    cmd_approx->add_option("--steepness", approx.steepness, "sigmoid steepness (inn)");
    cmd_approx->add_option("--max-terms", approx.max_terms, "inner term cap (inn)");

    std::uint64_t seed = 0;
    std::string verify_out;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the law suites");
    cmd_verify->add_option("--seed", seed, "random seed");
    cmd_verify->add_option("--out", verify_out, "report JSON path");

    double sb_a = 0.0, sb_b = 1.0, sb_delta = 0.25;
    std::string sb_out;
    CLI::App* cmd_bump =
        app.add_subcommand("synth-bump", "search a step polynomial and verify it");
    cmd_bump->add_option("--a", sb_a, "plateau end")->required();
    cmd_bump->add_option("--b", sb_b, "decay start")->required();
    cmd_bump->add_option("--delta", sb_delta, "level tolerance")->required();
    cmd_bump->add_option("--out", sb_out, "report JSON path");

    std::string ei_model;
    double ei_x = 0.0;
    CLI::App* cmd_eval =
        app.add_subcommand("eval-inn", "evaluate a stored interval network");
    cmd_eval->add_option("--model", ei_model, "network JSON path")->required();
    cmd_eval->add_option("--x", ei_x, "input")->required();

    CLI::App* cmd_export = app.add_subcommand("export", "plot-ready CSV exports");
    cmd_export->require_subcommand(1);
    FunctionArgs sweep_fn;
    double sweep_eps = 0.01;
    std::vector<std::size_t> sweep_ns = {4, 8, 16, 32};
    std::size_t sweep_grid = default_grid();
    std::string sweep_out;
    CLI::App* cmd_sweep =
        cmd_export->add_subcommand("sweep", "error-vs-n sweep for one function");
    add_function_flags(cmd_sweep, sweep_fn);
    cmd_sweep->add_option("--eps", sweep_eps, "slack epsilon");
    cmd_sweep->add_option("--ns", sweep_ns, "node counts")->delimiter(',');
    cmd_sweep->add_option("--grid", sweep_grid, "grid resolution");
    cmd_sweep->add_option("--out", sweep_out, "CSV path");

    FunctionArgs overlay_fn;
    std::string overlay_model;
    std::size_t overlay_grid = default_grid();
    std::string overlay_out;
    CLI::App* cmd_overlay =
        cmd_export->add_subcommand("overlay", "function vs stored model samples");
    add_function_flags(cmd_overlay, overlay_fn);
    cmd_overlay->add_option("--model", overlay_model, "network JSON path")
        ->required();
    cmd_overlay->add_option("--grid", overlay_grid, "grid resolution");
    cmd_overlay->add_option("--out", overlay_out, "CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (cmd_approx->parsed()) {
            if (approx.grid_n < 11)
                throw iva::DomainError("grid resolution must be >= 11");
            if (!(approx.eps > 0.0))
                throw iva::DomainError("eps must be positive");
            if (approx.method == "jackson" && approx.n < 1)
                throw iva::DomainError("jackson requires n >= 1");
            return run_approximate(approx);
        }
        if (cmd_verify->parsed())
            return run_verify(seed, verify_out);
        if (cmd_bump->parsed())
            return run_synth_bump(sb_a, sb_b, sb_delta, sb_out);
        if (cmd_eval->parsed())
            return run_eval_inn(ei_model, ei_x);
        if (cmd_sweep->parsed())
            return run_export_sweep(sweep_fn, sweep_eps, sweep_ns, sweep_grid,
                                    sweep_out);
        if (cmd_overlay->parsed())
            return run_export_overlay(overlay_fn, overlay_model, overlay_grid,
                                      overlay_out);
    } catch (const iva::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
