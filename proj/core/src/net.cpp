#include "andre/net.hpp"

#include <cassert>
#include <cmath>

namespace andre {

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

DenseNet1H::DenseNet1H(int hidden_count)
    : hidden_(hidden_count), w_(size_t(3 * hidden_count + 1), 0.0) {
    assert(hidden_count >= 1);
}

double DenseNet1H::value(double t) const {
    const int h = hidden_;
    const double* nu = w_.data();
    const double* eta = nu + h;
    const double* rho = eta + h;
    double acc = w_[size_t(3 * h)];
    for (int j = 0; j < h; ++j) {
        acc += rho[j] * sigmoid(nu[j] * t + eta[j]);
    }
    return acc;
}

double DenseNet1H::dt(double t) const {
    const int h = hidden_;
    const double* nu = w_.data();
    const double* eta = nu + h;
    const double* rho = eta + h;
    double acc = 0.0;
    for (int j = 0; j < h; ++j) {
        const double s = sigmoid(nu[j] * t + eta[j]);
        acc += rho[j] * s * (1.0 - s) * nu[j];
    }
    return acc;
}

void DenseNet1H::value_and_dt(double t, double& value, double& dt) const {
    const int h = hidden_;
    const double* nu = w_.data();
    const double* eta = nu + h;
    const double* rho = eta + h;
    double av = w_[size_t(3 * h)];
    double ad = 0.0;
    for (int j = 0; j < h; ++j) {
        const double s = sigmoid(nu[j] * t + eta[j]);
        av += rho[j] * s;
        ad += rho[j] * s * (1.0 - s) * nu[j];
    }
    value = av;
    dt = ad;
}

void DenseNet1H::grad_value(double t, std::span<double> out) const {
    assert(out.size() == size_t(weight_count()));
    const int h = hidden_;
    const double* nu = w_.data();
    const double* eta = nu + h;
    const double* rho = eta + h;
    for (int j = 0; j < h; ++j) {
        const double s = sigmoid(nu[j] * t + eta[j]);
        const double sp = s * (1.0 - s);
        out[size_t(j)] = rho[j] * sp * t;       // d/d nu_j
        out[size_t(h + j)] = rho[j] * sp;       // d/d eta_j
        out[size_t(2 * h + j)] = s;             // d/d rho_j
    }
    out[size_t(3 * h)] = 1.0;                   // d/d gamma
}

void DenseNet1H::grad_dt(double t, std::span<double> out) const {
    assert(out.size() == size_t(weight_count()));
    const int h = hidden_;
    const double* nu = w_.data();
    const double* eta = nu + h;
    const double* rho = eta + h;
    for (int j = 0; j < h; ++j) {
        const double s = sigmoid(nu[j] * t + eta[j]);
        const double sp = s * (1.0 - s);
        const double spp = sp * (1.0 - 2.0 * s);  // d^2 sigma / dz^2
        out[size_t(j)] = rho[j] * (spp * t * nu[j] + sp);
        out[size_t(h + j)] = rho[j] * spp * nu[j];
        out[size_t(2 * h + j)] = sp * nu[j];
    }
    out[size_t(3 * h)] = 0.0;
}

void DenseNet1H::eval(double t, double& value, double& dt,
                      std::span<double> grad_value, std::span<double> grad_dt) const {
    assert(grad_value.size() == size_t(weight_count()));
    assert(grad_dt.size() == size_t(weight_count()));
    const int h = hidden_;
    const double* nu = w_.data();
    const double* eta = nu + h;
    const double* rho = eta + h;
    double av = w_[size_t(3 * h)];
    double ad = 0.0;
    for (int j = 0; j < h; ++j) {
        const double s = sigmoid(nu[j] * t + eta[j]);
        const double sp = s * (1.0 - s);
        const double spp = sp * (1.0 - 2.0 * s);
        const double rsp = rho[j] * sp;
        av += rho[j] * s;
        ad += rsp * nu[j];
        grad_value[size_t(j)] = rsp * t;
        grad_value[size_t(h + j)] = rsp;
        grad_value[size_t(2 * h + j)] = s;
        grad_dt[size_t(j)] = rho[j] * (spp * t * nu[j] + sp);
        grad_dt[size_t(h + j)] = rho[j] * spp * nu[j];
        grad_dt[size_t(2 * h + j)] = sp * nu[j];
    }
    grad_value[size_t(3 * h)] = 1.0;
    grad_dt[size_t(3 * h)] = 0.0;
    value = av;
    dt = ad;
}

}  // namespace andre
