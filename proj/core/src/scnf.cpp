#include "andre/scnf.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace andre {

SubdomainGrid make_grid(double t_left, double t_right, int n_tp, int n_vp) {
    if (!(t_left < t_right)) {
        throw std::invalid_argument("make_grid: interval is degenerate (t_left >= t_right)");
    }
    if (n_tp < 1 || n_vp < 1) {
        throw std::invalid_argument("make_grid: point counts must be >= 1");
    }
    auto equidistant = [](double a, double b, int n) {
        std::vector<double> p(size_t(n) + 1);
        const double w = b - a;
        for (int i = 0; i <= n; ++i) {
            p[size_t(i)] = a + w * (double(i) / double(n));
        }
        p.front() = a;
        p.back() = b;
        return p;
    };
    SubdomainGrid g;
    g.t_left = t_left;
    g.t_right = t_right;
    g.training_points = equidistant(t_left, t_right, n_tp);
    g.verification_points = equidistant(t_left, t_right, n_vp);
    return g;
}

ScnfModel::ScnfModel(int order, Ansatz ansatz, int equations, int hidden_count,
                     std::vector<double> initial_value, double t0)
    : order_(order), ansatz_(ansatz), equations_(equations), t0_(t0),
      initial_value_(std::move(initial_value)) {
    if (order_ < 1) throw std::invalid_argument("ScnfModel: order must be >= 1");
    if (equations_ < 1) throw std::invalid_argument("ScnfModel: equations must be >= 1");
    if (initial_value_.size() != size_t(equations_)) {
        throw std::invalid_argument("ScnfModel: initial value size must match equations");
    }
    nets_.reserve(size_t(order_) * size_t(equations_));
    for (int i = 0; i < order_ * equations_; ++i) {
        nets_.emplace_back(hidden_count);
    }
}

void ScnfModel::set_initial_value(std::vector<double> u0) {
    if (u0.size() != size_t(equations_)) {
        throw std::invalid_argument("ScnfModel: initial value size must match equations");
    }
    initial_value_ = std::move(u0);
}

std::size_t ScnfModel::weight_count() const {
    return nets_.size() * size_t(nets_.front().weight_count());
}

void ScnfModel::copy_weights(std::span<double> out) const {
    assert(out.size() == weight_count());
    size_t off = 0;
    for (const auto& n : nets_) {
        auto w = n.weights();
        std::copy(w.begin(), w.end(), out.begin() + long(off));
        off += w.size();
    }
}

void ScnfModel::set_weights(std::span<const double> in) {
    assert(in.size() == weight_count());
    size_t off = 0;
    for (auto& n : nets_) {
        auto w = n.weights();
        std::copy(in.begin() + long(off), in.begin() + long(off + w.size()), w.begin());
        off += w.size();
    }
}

void ScnfModel::value(double t, std::span<double> out) const {
    assert(out.size() == size_t(equations_));
    const double d = t - t0_;
    for (int q = 0; q < equations_; ++q) {
        double acc;
        if (ansatz_ == Ansatz::HardIC) {
            acc = initial_value_[size_t(q)];
            double pw = 1.0;
            for (int k = 0; k < order_; ++k) {
                pw *= d;  // (t - t0)^{k+1}, by repeated multiplication
                acc += nets_[index(q, k)].value(t) * pw;
            }
        } else {
            acc = nets_[index(q, 0)].value(t);
            double pw = 1.0;
            for (int k = 1; k < order_; ++k) {
                pw *= d;  // (t - t0)^k
                acc += nets_[index(q, k)].value(t) * pw;
            }
        }
        out[size_t(q)] = acc;
    }
}

std::vector<double> ScnfModel::value(double t) const {
    std::vector<double> out(static_cast<size_t>(equations_));
    value(t, out);
    return out;
}

void ScnfModel::dt(double t, std::span<double> out) const {
    assert(out.size() == size_t(equations_));
    const double d = t - t0_;
    for (int q = 0; q < equations_; ++q) {
        double acc = 0.0;
        double nv = 0.0, nd = 0.0;
        if (ansatz_ == Ansatz::HardIC) {
            double pw_lo = 1.0;  // (t - t0)^k for the product-rule term
            for (int k = 0; k < order_; ++k) {
                const double pw_hi = pw_lo * d;
                nets_[index(q, k)].value_and_dt(t, nv, nd);
                acc += nd * pw_hi + nv * double(k + 1) * pw_lo;
                pw_lo = pw_hi;
            }
        } else {
            nets_[index(q, 0)].value_and_dt(t, nv, nd);
            acc = nd;
            double pw_lo = 1.0;  // (t - t0)^{k-1}
            for (int k = 1; k < order_; ++k) {
                const double pw_hi = pw_lo * d;
                nets_[index(q, k)].value_and_dt(t, nv, nd);
                acc += nd * pw_hi + nv * double(k) * pw_lo;
                pw_lo = pw_hi;
            }
        }
        out[size_t(q)] = acc;
    }
}

std::vector<double> ScnfModel::dt(double t) const {
    std::vector<double> out(static_cast<size_t>(equations_));
    dt(t, out);
    return out;
}

void ScnfWorkspace::resize(const ScnfModel& model, const IvpProblem& problem) {
    const size_t o = size_t(problem.dimension);
    const size_t nets = size_t(model.equations()) * size_t(model.order());
    const size_t w = size_t(3 * model.hidden_count() + 1);
    u.resize(o);
    du.resize(o);
    res.resize(o);
    adj_u.resize(o);
    adj_du.resize(o);
    dg_du.resize(o * o);
    dg_ddu.resize(o * o);
    net_val.resize(nets);
    net_dt.resize(nets);
    gv.resize(nets * w);
    gd.resize(nets * w);
}

namespace {

void check_inputs(const ScnfModel& model, const IvpProblem& problem,
                  std::span<const double> points) {
    if (points.empty()) {
        throw std::invalid_argument("cost: point set is empty");
    }
    if (problem.dimension != model.equations()) {
        throw std::invalid_argument("cost: problem dimension does not match model");
    }
    if (!problem.residual) {
        throw std::invalid_argument("cost: problem has no residual");
    }
}

}  // namespace

double cost(const ScnfModel& model, const IvpProblem& problem, std::span<const double> points,
            ScnfWorkspace& ws) {
    check_inputs(model, problem, points);
    ws.resize(model, problem);
    const size_t o = size_t(model.equations());
    double acc = 0.0;
    for (const double t : points) {
        model.value(t, ws.u);
        model.dt(t, ws.du);
        problem.residual(t, ws.u, ws.du, ws.res);
        for (size_t q = 0; q < o; ++q) {
            acc += ws.res[q] * ws.res[q];
        }
    }
    double e = acc / (2.0 * double(points.size()));
    if (model.ansatz() == Ansatz::LearnedIC) {
        for (int q = 0; q < model.equations(); ++q) {
            const double r =
                model.net(q, 0).value(model.t0()) - model.initial_value()[size_t(q)];
            e += 0.5 * r * r;
        }
    }
    return e;
}

double cost(const ScnfModel& model, const IvpProblem& problem, std::span<const double> points) {
    ScnfWorkspace ws(model, problem);
    return cost(model, problem, points, ws);
}

double cost_gradient(const ScnfModel& model, const IvpProblem& problem,
                     std::span<const double> points, std::span<double> grad, ScnfWorkspace& ws) {
    check_inputs(model, problem, points);
    if (!problem.jacobian) {
        throw std::invalid_argument("cost_gradient: problem has no jacobian");
    }
    if (grad.size() != model.weight_count()) {
        throw std::invalid_argument("cost_gradient: gradient size mismatch");
    }
    ws.resize(model, problem);
    std::fill(grad.begin(), grad.end(), 0.0);

    const int o = model.equations();
    const int m = model.order();
    const bool hard = model.ansatz() == Ansatz::HardIC;
    const size_t nw = size_t(3 * model.hidden_count() + 1);
    const double t0 = model.t0();
    double acc = 0.0;

    for (const double t : points) {
        const double d = t - t0;

        // Per-network value, derivative and weight gradients; then the trial
        // solution per equation via the polynomial in (t - t0).
        for (int q = 0; q < o; ++q) {
            double uv = hard ? model.initial_value()[size_t(q)] : 0.0;
            double ud = 0.0;
            double pw_lo = 1.0;
            for (int k = 0; k < m; ++k) {
                const size_t idx = size_t(q) * size_t(m) + size_t(k);
                std::span<double> gvk(ws.gv.data() + idx * nw, nw);
                std::span<double> gdk(ws.gd.data() + idx * nw, nw);
                model.net(q, k).eval(t, ws.net_val[idx], ws.net_dt[idx], gvk, gdk);
                if (hard) {
                    const double pw_hi = pw_lo * d;  // (t-t0)^{k+1}
                    uv += ws.net_val[idx] * pw_hi;
                    ud += ws.net_dt[idx] * pw_hi + ws.net_val[idx] * double(k + 1) * pw_lo;
                    pw_lo = pw_hi;
                } else if (k == 0) {
                    uv += ws.net_val[idx];
                    ud += ws.net_dt[idx];
                } else {
                    const double pw_hi = pw_lo * d;  // (t-t0)^k
                    uv += ws.net_val[idx] * pw_hi;
                    ud += ws.net_dt[idx] * pw_hi + ws.net_val[idx] * double(k) * pw_lo;
                    pw_lo = pw_hi;
                }
            }
            ws.u[size_t(q)] = uv;
            ws.du[size_t(q)] = ud;
        }

        problem.residual(t, ws.u, ws.du, ws.res);
        problem.jacobian(t, ws.u, ws.du, ws.dg_du, ws.dg_ddu);
        for (int q = 0; q < o; ++q) {
            acc += ws.res[size_t(q)] * ws.res[size_t(q)];
        }

        // adj_u[r] = sum_q G_q dG_q/du_r, adj_du[r] = sum_q G_q dG_q/du'_r.
        for (int r = 0; r < o; ++r) {
            double au = 0.0, ad = 0.0;
            for (int q = 0; q < o; ++q) {
                au += ws.res[size_t(q)] * ws.dg_du[size_t(q) * size_t(o) + size_t(r)];
                ad += ws.res[size_t(q)] * ws.dg_ddu[size_t(q) * size_t(o) + size_t(r)];
            }
            ws.adj_u[size_t(r)] = au;
            ws.adj_du[size_t(r)] = ad;
        }

        // The weight block of net (q, k) touches only equation q:
        //   d u_q / dp  = P_v * dN/dp
        //   d u'_q / dp = P_v * dNdot/dp + P_d * dN/dp
        // with P_v the power factor of the value term and P_d of the
        // product-rule term.
        for (int q = 0; q < o; ++q) {
            double pw_lo = 1.0;
            for (int k = 0; k < m; ++k) {
                double pv, pd;
                if (hard) {
                    const double pw_hi = pw_lo * d;
                    pv = pw_hi;
                    pd = double(k + 1) * pw_lo;
                    pw_lo = pw_hi;
                } else if (k == 0) {
                    pv = 1.0;
                    pd = 0.0;
                } else {
                    const double pw_hi = pw_lo * d;
                    pv = pw_hi;
                    pd = double(k) * pw_lo;
                    pw_lo = pw_hi;
                }
                const double cv = ws.adj_u[size_t(q)] * pv + ws.adj_du[size_t(q)] * pd;
                const double cd = ws.adj_du[size_t(q)] * pv;
                const size_t idx = size_t(q) * size_t(m) + size_t(k);
                const double* gvk = ws.gv.data() + idx * nw;
                const double* gdk = ws.gd.data() + idx * nw;
                double* out = grad.data() + idx * nw;
                for (size_t i = 0; i < nw; ++i) {
                    out[i] += cv * gvk[i] + cd * gdk[i];
                }
            }
        }
    }

    const double inv_n = 1.0 / double(points.size());
    for (auto& g : grad) {
        g *= inv_n;
    }
    double e = acc * 0.5 * inv_n;

    if (!hard) {
        // Initial-value penalty: 1/2 sum_q (N_{q,1}(t0) - u0_q)^2, not
        // averaged over collocation points.
        std::vector<double> gv0(nw), gd0(nw);
        for (int q = 0; q < o; ++q) {
            double nv = 0.0, nd = 0.0;
            model.net(q, 0).eval(t0, nv, nd, gv0, gd0);
            const double r = nv - model.initial_value()[size_t(q)];
            e += 0.5 * r * r;
            double* out = grad.data() + size_t(q) * size_t(m) * nw;
            for (size_t i = 0; i < nw; ++i) {
                out[i] += r * gv0[i];
            }
        }
    }
    return e;
}

double cost_gradient(const ScnfModel& model, const IvpProblem& problem,
                     std::span<const double> points, std::span<double> grad) {
    ScnfWorkspace ws(model, problem);
    return cost_gradient(model, problem, points, grad, ws);
}

}  // namespace andre
