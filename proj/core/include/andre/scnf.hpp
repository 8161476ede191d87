#pragma once

#include <span>
#include <vector>

#include "andre/net.hpp"
#include "andre/problem.hpp"

namespace andre {

/// How the trial solution treats the subdomain's initial value.
///
/// HardIC builds it into the ansatz,
///     u~(t) = u0 + sum_{k=1..m} N_k(t) * (t - t0)^k,
/// so u~(t0) = u0 holds for any weights. LearnedIC lets the first network
/// carry the initial value,
///     u~(t) = N_1(t) + sum_{k=2..m} N_k(t) * (t - t0)^{k-1},
/// and the cost adds a penalty pulling N_1(t0) toward u0.
enum class Ansatz { HardIC, LearnedIC };

/// Equidistant collocation grids over one subdomain. n_tp = 9 yields ten
/// training points, n_vp = 11 yields twelve verification points; both sets
/// share the subdomain endpoints and the interior verification points fall
/// between training points.
struct SubdomainGrid {
    double t_left = 0.0;
    double t_right = 0.0;
    std::vector<double> training_points;
    std::vector<double> verification_points;
};

/// Throws std::invalid_argument on a degenerate interval or counts < 1.
SubdomainGrid make_grid(double t_left, double t_right, int n_tp, int n_vp);

/// Trial solution for one subdomain: m networks per equation plus the
/// subdomain's inherited initial value. Weights across all networks form one
/// flat vector (network blocks ordered by equation, then polynomial index)
/// so the optimizer sees a single parameter vector.
class ScnfModel {
public:
    ScnfModel(int order, Ansatz ansatz, int equations, int hidden_count,
              std::vector<double> initial_value, double t0);

    int order() const { return order_; }
    Ansatz ansatz() const { return ansatz_; }
    int equations() const { return equations_; }
    int hidden_count() const { return nets_.front().hidden_count(); }
    double t0() const { return t0_; }

    const std::vector<double>& initial_value() const { return initial_value_; }
    void set_initial_value(std::vector<double> u0);

    /// Network for equation q and polynomial slot k (0-based; slot k carries
    /// power k+1 under HardIC, and slot 0 is the free term under LearnedIC).
    const DenseNet1H& net(int equation, int k) const { return nets_[index(equation, k)]; }
    DenseNet1H& net(int equation, int k) { return nets_[index(equation, k)]; }

    std::size_t weight_count() const;
    void copy_weights(std::span<double> out) const;
    void set_weights(std::span<const double> in);

    /// Trial solution u~(t); out has length equations().
    void value(double t, std::span<double> out) const;
    std::vector<double> value(double t) const;

    /// Time derivative of the trial solution.
    void dt(double t, std::span<double> out) const;
    std::vector<double> dt(double t) const;

private:
    std::size_t index(int equation, int k) const {
        return size_t(equation) * size_t(order_) + size_t(k);
    }

    int order_;
    Ansatz ansatz_;
    int equations_;
    double t0_;
    std::vector<double> initial_value_;
    std::vector<DenseNet1H> nets_;  // equations * order, equation-major
};

/// Scratch buffers for cost/gradient evaluation; reused across epochs so the
/// training loop performs no allocation.
struct ScnfWorkspace {
    ScnfWorkspace() = default;
    ScnfWorkspace(const ScnfModel& model, const IvpProblem& problem) { resize(model, problem); }
    void resize(const ScnfModel& model, const IvpProblem& problem);

    std::vector<double> u, du, res;       // dimension o each
    std::vector<double> adj_u, adj_du;    // o: residual-weighted jacobian rows
    std::vector<double> dg_du, dg_ddu;    // o*o row-major
    std::vector<double> net_val, net_dt;  // o*m
    std::vector<double> gv, gd;           // o*m*(3H+1): per-network weight grads
};

/// Mean-square residual cost over the given collocation points,
///     E = 1/(2n) * sum_i sum_q G_q(t_i, u~, u~')^2,   n = points.size(),
/// plus, under LearnedIC, the initial-value penalty
/// 1/2 * sum_q (N_{q,1}(t0) - u0_q)^2. Non-finite weights propagate to a
/// non-finite result rather than throwing. Throws std::invalid_argument on
/// an empty point set or a dimension mismatch.
double cost(const ScnfModel& model, const IvpProblem& problem, std::span<const double> points);
double cost(const ScnfModel& model, const IvpProblem& problem, std::span<const double> points,
            ScnfWorkspace& ws);

/// Cost together with its gradient over the full flat weight vector
/// (chain rule through the trial solution and its time derivative, averaged
/// over the points). Returns the cost; grad must have length
/// model.weight_count().
double cost_gradient(const ScnfModel& model, const IvpProblem& problem,
                     std::span<const double> points, std::span<double> grad);
double cost_gradient(const ScnfModel& model, const IvpProblem& problem,
                     std::span<const double> points, std::span<double> grad, ScnfWorkspace& ws);

}  // namespace andre
