#pragma once

#include <span>
#include <vector>

namespace andre {

/// Logistic sigmoid 1/(1+exp(-z)), computed sign-split so the exponential
/// never overflows for |z| up to ~700.
double sigmoid(double z);

/// Shallow feedforward network with one scalar input, H sigmoid hidden
/// units (input weight + input bias each) and a linear output unit with
/// bias: N(t) = sum_j rho_j * sigmoid(nu_j * t + eta_j) + gamma.
///
/// The 3H+1 weights live in one flat vector in the canonical order
/// [nu_0..nu_{H-1} | eta_0..eta_{H-1} | rho_0..rho_{H-1} | gamma].
/// Every gradient vector and optimizer moment buffer in this project is
/// laid out in the same order.
class DenseNet1H {
public:
    explicit DenseNet1H(int hidden_count);  // weights start at zero

    int hidden_count() const { return hidden_; }
    int weight_count() const { return 3 * hidden_ + 1; }

    std::span<const double> weights() const { return w_; }
    std::span<double> weights() { return w_; }

    std::span<const double> input_weights() const { return {w_.data(), size_t(hidden_)}; }
    std::span<double> input_weights() { return {w_.data(), size_t(hidden_)}; }
    std::span<const double> input_bias() const { return {w_.data() + hidden_, size_t(hidden_)}; }
    std::span<double> input_bias() { return {w_.data() + hidden_, size_t(hidden_)}; }
    std::span<const double> output_weights() const { return {w_.data() + 2 * hidden_, size_t(hidden_)}; }
    std::span<double> output_weights() { return {w_.data() + 2 * hidden_, size_t(hidden_)}; }
    double output_bias() const { return w_[3 * hidden_]; }
    double& output_bias() { return w_[3 * hidden_]; }

    /// Network output N(t).
    double value(double t) const;

    /// Time derivative dN/dt.
    double dt(double t) const;

    void value_and_dt(double t, double& value, double& dt) const;

    /// Partials of N(t) with respect to every weight, canonical order.
    void grad_value(double t, std::span<double> out) const;

    /// Partials of dN/dt with respect to every weight, canonical order.
    void grad_dt(double t, std::span<double> out) const;

    /// Fused evaluation for the training loop: value, time derivative and
    /// both weight gradients with a single exp() per hidden unit.
    /// grad_value / grad_dt must have length weight_count().
    void eval(double t, double& value, double& dt,
              std::span<double> grad_value, std::span<double> grad_dt) const;

private:
    int hidden_;
    std::vector<double> w_;
};

}  // namespace andre
