#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "andre/export.hpp"
#include "andre/problems.hpp"
#include "andre/refine.hpp"
#include "andre/sweep.hpp"

namespace {

struct ProblemDefaults {
    double sigma;
    int increments;
};

// Long-run defaults per benchmark problem (verification bound and learning
// increments); ivp3 trains with two increments, the rest with five.
ProblemDefaults defaults_for(const std::string& name) {
    if (name == "ivp1") return {1e-5, 5};
    if (name == "ivp2") return {1e-4, 5};
    if (name == "ivp3") return {1e0, 2};
    if (name == "ivp4") return {1e-3, 5};
    return {1e-4, 5};  // example10 and user problems
}

struct CommonOptions {
    std::string problem = "ivp1";
    std::optional<double> sigma;
    double delta = 0.5;
    int order = 5;
    long epochs = 100000;
    std::optional<int> increments;
    int ntp = 9;
    int nvp = 11;
    std::string ansatz = "hard";
    std::string out_dir;
    std::optional<double> t_start;
    std::optional<double> t_end;
    double kappa0 = 5.0;
    bool paper_scale = false;
    bool quiet = false;
};

void add_common_options(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--problem", o.problem, "Problem name (see list-problems)")->required();
    cmd->add_option("--sigma", o.sigma, "Verification error bound (default per problem)");
    cmd->add_option("--delta", o.delta, "Subdomain resize factor in (0,1)")->capture_default_str();
    cmd->add_option("--order", o.order, "Trial solution order m")->capture_default_str();
    cmd->add_option("--epochs", o.epochs, "Training epochs per attempt")->capture_default_str();
    cmd->add_option("--increments", o.increments,
                    "Incremental-learning steps (default per problem)");
    cmd->add_option("--ntp", o.ntp, "Training intervals per subdomain (points = ntp+1)")
        ->capture_default_str();
    cmd->add_option("--nvp", o.nvp, "Verification intervals per subdomain (points = nvp+1)")
        ->capture_default_str();
    cmd->add_option("--ansatz", o.ansatz, "Initial-condition handling: hard|learned")
        ->check(CLI::IsMember({"hard", "learned"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_dir, "Directory for summary.json and CSV exports");
    cmd->add_option("--t-start", o.t_start, "Restrict the domain: new start time");
    cmd->add_option("--t-end", o.t_end, "Restrict the domain: new end time");
    cmd->add_option("--kappa0", o.kappa0, "Predator initial value for ivp4 (1, 3 or 5)")
        ->capture_default_str();
    cmd->add_flag("--paper-scale", o.paper_scale,
                  "Full-domain long run with the per-problem defaults (hours of CPU time)");
    cmd->add_flag("--quiet", o.quiet, "Suppress the per-attempt trace");
}

andre::IvpProblem resolve_problem(const CommonOptions& o) {
    andre::IvpProblem p =
        (o.problem == "ivp4") ? andre::lotka_volterra(o.kappa0) : andre::get_problem(o.problem);
    if (o.t_start || o.t_end) {
        p = andre::restrict_domain(p, o.t_start.value_or(p.t_start), o.t_end.value_or(p.t_end));
    }
    return p;
}

andre::AndreConfig resolve_config(const CommonOptions& o) {
    const auto def = defaults_for(o.problem);
    andre::AndreConfig cfg;
    cfg.sigma = o.sigma.value_or(def.sigma);
    cfg.delta = o.delta;
    cfg.order = o.order;
    cfg.n_tp = o.ntp;
    cfg.n_vp = o.nvp;
    cfg.ansatz = (o.ansatz == "learned") ? andre::Ansatz::LearnedIC : andre::Ansatz::HardIC;
    cfg.train.epochs = o.epochs;
    cfg.train.increments = o.increments.value_or(def.increments);
    return cfg;
}

void print_report_summary(const andre::RunReport& rep) {
    using andre::io::format_double;
    std::cout << "status:        " << andre::io::to_string(rep.status);
    if (!rep.abort_reason.empty()) std::cout << " (" << rep.abort_reason << ")";
    std::cout << "\nsubdomains:    " << rep.aggregates.h
              << "\ntotal epochs:  " << rep.aggregates.total_epochs
              << "\nwall time [s]: " << format_double(rep.aggregates.wall_seconds) << '\n';
    if (rep.aggregates.err_l1) {
        std::cout << "l1 error:      " << format_double(*rep.aggregates.err_l1) << " (vs "
                  << andre::io::to_string(rep.reference) << ")\n";
    }
    if (rep.aggregates.err_linf) {
        std::cout << "linf error:    " << format_double(*rep.aggregates.err_linf) << '\n';
    }
    if (rep.aggregates.h > 0) {
        std::cout << "mean E_VP:     " << format_double(rep.aggregates.mean_e_vp) << '\n'
                  << "mean E_TP:     " << format_double(rep.aggregates.mean_e_tp) << '\n';
    }
}

int run_solve(const CommonOptions& o) {
    const auto problem = resolve_problem(o);
    andre::AndreConfig cfg = resolve_config(o);
    if (o.paper_scale) {
        std::cout << "paper-scale run on [" << andre::io::format_double(problem.t_start) << ", "
                  << andre::io::format_double(problem.t_end)
                  << "]; expect a long wall time at sigma="
                  << andre::io::format_double(cfg.sigma) << "\n";
    }
    if (!o.quiet) {
        cfg.on_attempt = [](const andre::AttemptRecord& a) {
            using andre::io::format_double;
            std::cout << "l=" << a.subdomain << " attempt=" << a.attempt << " ["
                      << format_double(a.t_left) << ", " << format_double(a.t_right)
                      << "] H=" << a.hidden << " alpha=" << format_double(a.alpha)
                      << " E_TP=" << format_double(a.e_tp) << " E_VP=" << format_double(a.e_vp)
                      << " -> " << andre::io::to_string(a.action) << '\n';
        };
    }
    const auto report = andre::run(problem, cfg);
    print_report_summary(report);
    if (!o.out_dir.empty()) {
        andre::io::write_report(report, o.out_dir);
        std::cout << "report written to " << o.out_dir << '\n';
    }
    return report.status == andre::RunStatus::Completed ? 0 : 2;
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        const double v = std::stod(item, &used);
        if (used == 0) throw std::invalid_argument("cannot parse value '" + item + "'");
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("empty --values list");
    return values;
}

int run_sweep(const CommonOptions& o, const std::string& param, const std::string& values_csv) {
    const auto problem = resolve_problem(o);
    const andre::AndreConfig cfg = resolve_config(o);
    const auto values = parse_values(values_csv);
    const auto param_kind =
        (param == "delta") ? andre::SweepParam::Delta : andre::SweepParam::Sigma;

    const auto result = andre::sweep(problem, cfg, param_kind, values);

    std::cout << param << ",status,h,l1,mean_E_VP,mean_E_TP\n";
    for (const auto& row : result.rows) {
        using andre::io::format_double;
        std::cout << format_double(row.value) << ',' << andre::io::to_string(row.status) << ','
                  << row.h << ',' << (row.err_l1 ? format_double(*row.err_l1) : "") << ','
                  << format_double(row.mean_e_vp) << ',' << format_double(row.mean_e_tp) << '\n';
    }

    if (!o.out_dir.empty()) {
        const std::filesystem::path base = o.out_dir;
        andre::io::write_sweep_csv(result, [&] {
            std::error_code ec;
            std::filesystem::create_directories(base, ec);
            return base / "sweep.csv";
        }());
        for (size_t i = 0; i < result.reports.size(); ++i) {
            std::ostringstream dir;
            dir << param << "_" << andre::io::format_double(values[i]);
            andre::io::write_report(result.reports[i], base / dir.str());
        }
        std::cout << "sweep written to " << o.out_dir << '\n';
    }

    bool any_aborted = false;
    for (const auto& row : result.rows) {
        any_aborted = any_aborted || row.status == andre::RunStatus::Aborted;
    }
    return any_aborted ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive neural domain refinement for initial value problems"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list-problems", "List the built-in benchmark problems");

    CommonOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one problem adaptively");
    add_common_options(solve_cmd, solve_opts);

    CommonOptions sweep_opts;
    std::string sweep_param = "sigma";
    std::string sweep_values;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Repeat a run over a list of sigma or delta values "
                                    "(ANDRE_THREADS caps the parallel workers)");
    add_common_options(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--param", sweep_param, "Swept parameter: sigma|delta")
        ->check(CLI::IsMember({"sigma", "delta"}))
        ->required();
    sweep_cmd->add_option("--values", sweep_values, "Comma-separated parameter values")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (list_cmd->parsed()) {
            for (const auto& name : andre::problem_names()) {
                const auto p = andre::get_problem(name);
                std::cout << name << "  dim=" << p.dimension << "  domain=["
                          << andre::io::format_double(p.t_start) << ", "
                          << andre::io::format_double(p.t_end) << "]"
                          << (p.has_analytic() ? "  analytic solution" : "  rk4 reference")
                          << '\n';
            }
            return 0;
        }
        if (solve_cmd->parsed()) {
            if (solve_opts.paper_scale && (solve_opts.t_start || solve_opts.t_end)) {
                std::cerr << "error: --paper-scale uses the full problem domain; drop "
                             "--t-start/--t-end\n";
                return 1;
            }
            return run_solve(solve_opts);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(sweep_opts, sweep_param, sweep_values);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
