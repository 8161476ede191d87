#include "andre/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace andre {

AdamState::AdamState(std::size_t size, AdamConfig config)
    : config_(config), m_(size, 0.0), v_(size, 0.0) {}

bool AdamState::step(std::span<double> weights, std::span<const double> gradient) {
    if (weights.size() != m_.size() || gradient.size() != m_.size()) {
        throw std::invalid_argument("AdamState::step: size mismatch");
    }
    for (const double g : gradient) {
        if (!std::isfinite(g)) {
            return false;
        }
    }
    ++steps_;
    beta1_pow_ *= config_.beta1;
    beta2_pow_ *= config_.beta2;
    const double corr1 = 1.0 - beta1_pow_;
    const double corr2 = 1.0 - beta2_pow_;
    for (std::size_t i = 0; i < m_.size(); ++i) {
        const double g = gradient[i];
        m_[i] = config_.beta1 * m_[i] + (1.0 - config_.beta1) * g;
        v_[i] = config_.beta2 * v_[i] + (1.0 - config_.beta2) * g * g;
        const double m_hat = m_[i] / corr1;
        const double v_hat = v_[i] / corr2;
        weights[i] -= config_.alpha * m_hat / (std::sqrt(v_hat) + config_.epsilon);
    }
    return true;
}

std::vector<int> incremental_schedule(int n_points, int increments) {
    if (n_points < 1) throw std::invalid_argument("incremental_schedule: n_points < 1");
    if (increments < 1) throw std::invalid_argument("incremental_schedule: increments < 1");
    if (increments > n_points) increments = n_points;  // clamp
    std::vector<int> prefixes(static_cast<size_t>(increments));
    for (int s = 1; s <= increments; ++s) {
        prefixes[size_t(s - 1)] =
            int(std::llround(double(n_points) * double(s) / double(increments)));
    }
    prefixes.back() = n_points;
    return prefixes;
}

TrainResult train(ScnfModel& model, const IvpProblem& problem, const SubdomainGrid& grid,
                  const TrainConfig& config) {
    if (config.epochs < 0) throw std::invalid_argument("train: epochs < 0");
    const auto& points = grid.training_points;
    TrainResult result;
    ScnfWorkspace ws(model, problem);

    if (config.epochs > 0) {
        const auto schedule = incremental_schedule(int(points.size()), config.increments);
        const long per_increment = config.epochs / long(schedule.size());

        std::vector<double> weights(model.weight_count());
        std::vector<double> gradient(model.weight_count());
        model.copy_weights(weights);

        long spent = 0;
        for (size_t s = 0; s < schedule.size(); ++s) {
            const bool last = (s + 1 == schedule.size());
            const long budget = last ? config.epochs - spent : per_increment;
            std::span<const double> active(points.data(), size_t(schedule[s]));
            AdamState adam(weights.size(), config.adam);
            IncrementRecord rec{schedule[s], 0, 0.0};
            for (long e = 0; e < budget; ++e) {
                const double c = cost_gradient(model, problem, active, gradient, ws);
                ++result.epochs_run;
                ++rec.epochs;
                ++spent;
                rec.end_cost = c;
                if (!std::isfinite(c) || !adam.step(weights, gradient)) {
                    result.diverged = true;
                    result.divergence_epoch = result.epochs_run;
                    break;
                }
                model.set_weights(weights);
                // Early stop is evaluated only once every training point is
                // active, so the threshold compares against the full cost.
                if (last && config.stop_below > 0.0 && c < config.stop_below) {
                    result.stopped_early = true;
                    break;
                }
            }
            result.increments.push_back(rec);
            if (result.diverged || result.stopped_early) break;
        }
    }

    result.e_tp = cost(model, problem, points, ws);
    return result;
}

}  // namespace andre
