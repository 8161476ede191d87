#include "andre/rk4.hpp"

#include <algorithm>
#include <stdexcept>

namespace andre {

std::vector<double> Rk4Trajectory::at(double t) const {
    if (times.empty()) throw std::logic_error("Rk4Trajectory::at: empty trajectory");
    if (t <= times.front()) return values.front();
    if (t >= times.back()) return values.back();
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    const size_t hi = size_t(it - times.begin());
    const size_t lo = hi - 1;
    const double w = (t - times[lo]) / (times[hi] - times[lo]);
    std::vector<double> out(values[lo].size());
    for (size_t q = 0; q < out.size(); ++q) {
        out[q] = values[lo][q] + w * (values[hi][q] - values[lo][q]);
    }
    return out;
}

Rk4Trajectory rk4_solve(const IvpProblem& problem, int n_steps) {
    if (n_steps < 1) throw std::invalid_argument("rk4_solve: n_steps must be >= 1");
    if (!problem.has_rhs()) {
        throw std::invalid_argument("rk4_solve: problem has no explicit right-hand side");
    }
    const size_t o = size_t(problem.dimension);
    const double h = (problem.t_end - problem.t_start) / double(n_steps);

    Rk4Trajectory traj;
    traj.times.reserve(size_t(n_steps) + 1);
    traj.values.reserve(size_t(n_steps) + 1);

    std::vector<double> u = problem.initial_value;
    std::vector<double> k1(o), k2(o), k3(o), k4(o), tmp(o);
    double t = problem.t_start;
    traj.times.push_back(t);
    traj.values.push_back(u);

    for (int i = 0; i < n_steps; ++i) {
        problem.rhs(t, u, k1);
        for (size_t q = 0; q < o; ++q) tmp[q] = u[q] + 0.5 * h * k1[q];
        problem.rhs(t + 0.5 * h, tmp, k2);
        for (size_t q = 0; q < o; ++q) tmp[q] = u[q] + 0.5 * h * k2[q];
        problem.rhs(t + 0.5 * h, tmp, k3);
        for (size_t q = 0; q < o; ++q) tmp[q] = u[q] + h * k3[q];
        problem.rhs(t + h, tmp, k4);
        for (size_t q = 0; q < o; ++q) {
            u[q] += h / 6.0 * (k1[q] + 2.0 * (k2[q] + k3[q]) + k4[q]);
        }
        t = problem.t_start + double(i + 1) * h;
        traj.times.push_back(t);
        traj.values.push_back(u);
    }
    return traj;
}

}  // namespace andre
