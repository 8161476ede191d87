#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace andre {

/// An initial value problem in implicit residual form
///
///     G(t, u(t), u'(t)) = 0,   u(t_start) = u0,
///
/// where G may be a system of `dimension` equations. The residual and its
/// analytic partials drive collocation training; the explicit right-hand
/// side u' = f(t, u) feeds the Runge-Kutta baseline. `analytic` is the
/// closed-form solution when one is known.
struct IvpProblem {
    std::string name;
    int dimension = 1;
    double t_start = 0.0;
    double t_end = 1.0;
    std::vector<double> initial_value;

    /// g[q] = G_q(t, u, du). g has length `dimension`.
    std::function<void(double t, std::span<const double> u, std::span<const double> du,
                       std::span<double> g)>
        residual;

    /// Row-major o-by-o partials: dg_du[q*o + r] = dG_q/du_r,
    /// dg_ddu[q*o + r] = dG_q/du'_r.
    std::function<void(double t, std::span<const double> u, std::span<const double> du,
                       std::span<double> dg_du, std::span<double> dg_ddu)>
        jacobian;

    /// Explicit form f with u' = f(t, u); f has length `dimension`.
    std::function<void(double t, std::span<const double> u, std::span<double> f)> rhs;

    /// Closed-form solution u(t), when available.
    std::function<void(double t, std::span<double> u)> analytic;

    bool has_analytic() const { return static_cast<bool>(analytic); }
    bool has_rhs() const { return static_cast<bool>(rhs); }
};

}  // namespace andre
