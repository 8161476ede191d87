#pragma once

#include <functional>
#include <span>
#include <utility>

#include "andre/refine.hpp"

namespace andre {

/// Reference solution u(t) used for error metrics.
using ReferenceFn = std::function<void(double t, std::span<double> u)>;

/// Mean and maximum absolute deviation from the reference over the piece's
/// training points (n_tp + 1 equidistant points). For systems the absolute
/// errors are averaged over the equations at each point first.
std::pair<double, double> subdomain_errors(const SolutionPiece& piece, const ReferenceFn& reference,
                                           int n_tp);

/// Subdomain-averaged error norms: both the mean and the max statistic are
/// averaged over the subdomains.
std::pair<double, double> aggregate_errors(std::span<const SubdomainRecord> subdomains);

/// Fills per-subdomain error columns, the aggregates and the per-point
/// solution table of a report, using the analytic solution when the problem
/// has one and a fine fixed-step Runge-Kutta pass otherwise (1000 steps,
/// linearly interpolated; diagnostic quality). Returns which reference was
/// used; with no usable reference the error columns stay empty.
ReferenceKind fill_errors(RunReport& report, const IvpProblem& problem);

}  // namespace andre
