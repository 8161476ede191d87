#pragma once

#include <string>
#include <vector>

#include "andre/problem.hpp"

namespace andre {

/// Names of the built-in benchmark problems, in registry order:
/// ivp1, ivp2, ivp3, ivp4, example10.
std::vector<std::string> problem_names();

/// All built-in problems.
std::vector<IvpProblem> registry();

/// Lookup by name; throws std::invalid_argument listing the available names
/// when the name is unknown.
IvpProblem get_problem(const std::string& name);

/// Lotka-Volterra system with prey(0) = 3 and the given predator initial
/// value (the registry's ivp4 uses kappa0 = 5).
IvpProblem lotka_volterra(double kappa0);

/// Copy of a problem on a sub-interval of its domain. A shifted start takes
/// its initial value from the analytic solution when available, otherwise
/// from a fine Runge-Kutta pass.
IvpProblem restrict_domain(const IvpProblem& problem, double t_start, double t_end);

}  // namespace andre
