#include "andre/problems.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "andre/rk4.hpp"

namespace andre {

namespace {

IvpProblem make_ivp1() {
    IvpProblem p;
    p.name = "ivp1";
    p.dimension = 1;
    p.t_start = 0.0;
    p.t_end = 15.0;
    p.initial_value = {-1.0};
    p.residual = [](double t, std::span<const double> u, std::span<const double> du,
                    std::span<double> g) {
        g[0] = du[0] - t * std::sin(10.0 * t) + u[0];
    };
    p.jacobian = [](double, std::span<const double>, std::span<const double>,
                    std::span<double> dg_du, std::span<double> dg_ddu) {
        dg_du[0] = 1.0;
        dg_ddu[0] = 1.0;
    };
    p.rhs = [](double t, std::span<const double> u, std::span<double> f) {
        f[0] = t * std::sin(10.0 * t) - u[0];
    };
    p.analytic = [](double t, std::span<double> u) {
        u[0] = std::sin(10.0 * t) * (99.0 / 10201.0 + t / 101.0) +
               std::cos(10.0 * t) * (20.0 / 10201.0 - 10.0 * t / 101.0) -
               10221.0 / 10201.0 * std::exp(-t);
    };
    return p;
}

IvpProblem make_ivp2() {
    IvpProblem p;
    p.name = "ivp2";
    p.dimension = 1;
    p.t_start = 0.0;
    p.t_end = 25.0;
    p.initial_value = {5.0};
    auto g_term = [](double t) {
        return (1.0 + std::exp(t) * std::cos(t) / 1000.0) / (1.0 + t * t);
    };
    p.residual = [g_term](double t, std::span<const double> u, std::span<const double> du,
                          std::span<double> g) {
        g[0] = du[0] + g_term(t) + 2.0 * t / (1.0 + t * t) * u[0];
    };
    p.jacobian = [](double t, std::span<const double>, std::span<const double>,
                    std::span<double> dg_du, std::span<double> dg_ddu) {
        dg_du[0] = 2.0 * t / (1.0 + t * t);
        dg_ddu[0] = 1.0;
    };
    p.rhs = [g_term](double t, std::span<const double> u, std::span<double> f) {
        f[0] = -g_term(t) - 2.0 * t / (1.0 + t * t) * u[0];
    };
    p.analytic = [](double t, std::span<double> u) {
        const double e = std::exp(t);
        u[0] = (-t - e * std::cos(t) / 2000.0 - e * std::sin(t) / 2000.0 + 10001.0 / 2000.0) /
               (1.0 + t * t);
    };
    return p;
}

IvpProblem make_ivp3() {
    IvpProblem p;
    p.name = "ivp3";
    p.dimension = 1;
    p.t_start = 0.0;
    p.t_end = 20.0;
    p.initial_value = {std::atan(1.0)};  // pi/4
    p.residual = [](double t, std::span<const double> u, std::span<const double> du,
                    std::span<double> g) {
        const double cu = std::cos(u[0]);
        const double ct = std::cos(2.0 * t);
        g[0] = du[0] / (cu * cu) / (ct * ct) - 2.0;
    };
    p.jacobian = [](double t, std::span<const double> u, std::span<const double> du,
                    std::span<double> dg_du, std::span<double> dg_ddu) {
        const double cu = std::cos(u[0]);
        const double ct = std::cos(2.0 * t);
        const double sec2u = 1.0 / (cu * cu);
        const double sec2t = 1.0 / (ct * ct);
        dg_du[0] = du[0] * sec2t * 2.0 * sec2u * std::tan(u[0]);
        dg_ddu[0] = sec2u * sec2t;
    };
    p.rhs = [](double t, std::span<const double> u, std::span<double> f) {
        const double cu = std::cos(u[0]);
        const double ct = std::cos(2.0 * t);
        f[0] = 2.0 * cu * cu * ct * ct;
    };
    p.analytic = [](double t, std::span<double> u) {
        u[0] = std::atan(0.25 * std::sin(4.0 * t) + t + 1.0);
    };
    return p;
}

constexpr double kPreyGrowth = 1.5;      // A
constexpr double kPredation = 1.0;       // B
constexpr double kPredatorDeath = 3.0;   // C
constexpr double kPredatorGrowth = 1.0;  // D

}  // namespace

IvpProblem lotka_volterra(double kappa0) {
    IvpProblem p;
    p.name = "ivp4";
    p.dimension = 2;
    p.t_start = 0.0;
    p.t_end = 30.0;
    p.initial_value = {3.0, kappa0};
    p.residual = [](double, std::span<const double> u, std::span<const double> du,
                    std::span<double> g) {
        g[0] = du[0] - kPreyGrowth * u[0] + kPredation * u[0] * u[1];
        g[1] = du[1] + kPredatorDeath * u[1] - kPredatorGrowth * u[0] * u[1];
    };
    p.jacobian = [](double, std::span<const double> u, std::span<const double>,
                    std::span<double> dg_du, std::span<double> dg_ddu) {
        dg_du[0] = -kPreyGrowth + kPredation * u[1];  // dG1/du1
        dg_du[1] = kPredation * u[0];                 // dG1/du2
        dg_du[2] = -kPredatorGrowth * u[1];           // dG2/du1
        dg_du[3] = kPredatorDeath - kPredatorGrowth * u[0];
        dg_ddu[0] = 1.0;
        dg_ddu[1] = 0.0;
        dg_ddu[2] = 0.0;
        dg_ddu[3] = 1.0;
    };
    p.rhs = [](double, std::span<const double> u, std::span<double> f) {
        f[0] = kPreyGrowth * u[0] - kPredation * u[0] * u[1];
        f[1] = -kPredatorDeath * u[1] + kPredatorGrowth * u[0] * u[1];
    };
    return p;
}

namespace {

IvpProblem make_example10() {
    // The small constant-coefficient example used for optimisation walkthroughs
    // and quick tests; same equation as ivp1 on a short domain.
    IvpProblem p = make_ivp1();
    p.name = "example10";
    p.t_end = 1.0;
    return p;
}

}  // namespace

std::vector<std::string> problem_names() {
    return {"ivp1", "ivp2", "ivp3", "ivp4", "example10"};
}

std::vector<IvpProblem> registry() {
    std::vector<IvpProblem> all;
    all.push_back(make_ivp1());
    all.push_back(make_ivp2());
    all.push_back(make_ivp3());
    all.push_back(lotka_volterra(5.0));
    all.push_back(make_example10());
    return all;
}

IvpProblem get_problem(const std::string& name) {
    for (auto& p : registry()) {
        if (p.name == name) return p;
    }
    std::ostringstream msg;
    msg << "unknown problem '" << name << "'; available:";
    for (const auto& n : problem_names()) msg << " " << n;
    throw std::invalid_argument(msg.str());
}

IvpProblem restrict_domain(const IvpProblem& problem, double t_start, double t_end) {
    if (!(t_start < t_end)) {
        throw std::invalid_argument("restrict_domain: t_start must be < t_end");
    }
    if (t_start < problem.t_start || t_end > problem.t_end) {
        throw std::invalid_argument("restrict_domain: interval outside the problem domain");
    }
    IvpProblem p = problem;
    p.t_end = t_end;
    if (t_start > problem.t_start) {
        p.t_start = t_start;
        if (problem.has_analytic()) {
            problem.analytic(t_start, p.initial_value);
        } else if (problem.has_rhs()) {
            IvpProblem head = problem;
            head.t_end = t_start;
            const int steps = std::max(1000, int(std::ceil((t_start - problem.t_start) / 1e-4)));
            p.initial_value = rk4_solve(head, steps).values.back();
        } else {
            throw std::invalid_argument(
                "restrict_domain: cannot shift the start without an analytic solution or rhs");
        }
    }
    return p;
}

}  // namespace andre
