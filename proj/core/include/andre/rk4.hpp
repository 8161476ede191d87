#pragma once

#include <vector>

#include "andre/problem.hpp"

namespace andre {

/// Fixed-step trajectory from the classic fourth-order Runge-Kutta scheme.
struct Rk4Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> values;  // values[i][q]

    /// Piecewise-linear interpolation between stored samples; clamps to the
    /// trajectory endpoints outside the integrated range.
    std::vector<double> at(double t) const;
};

/// Integrates u' = f(t, u) over the problem's domain with n_steps fixed
/// steps. The problem must expose an explicit right-hand side.
Rk4Trajectory rk4_solve(const IvpProblem& problem, int n_steps);

}  // namespace andre
