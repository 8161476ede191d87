#pragma once

#include <span>
#include <vector>

#include "andre/scnf.hpp"

namespace andre {

struct AdamConfig {
    double alpha = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Adam with bias correction. Moment vectors are aligned with the canonical
/// flat weight order used by ScnfModel and DenseNet1H.
class AdamState {
public:
    AdamState(std::size_t size, AdamConfig config);

    /// One update, in place. Returns false (and leaves the weights and
    /// moments untouched) when the gradient contains a non-finite entry --
    /// the caller's divergence signal.
    bool step(std::span<double> weights, std::span<const double> gradient);

    long step_count() const { return steps_; }
    const AdamConfig& config() const { return config_; }

private:
    AdamConfig config_;
    long steps_ = 0;
    double beta1_pow_ = 1.0;
    double beta2_pow_ = 1.0;
    std::vector<double> m_;
    std::vector<double> v_;
};

/// Growing prefix sizes for incremental learning: roughly even chunks ending
/// at n_points, e.g. (10, 5) -> {2,4,6,8,10} and (10, 2) -> {5,10}.
/// increments above n_points are clamped to n_points.
std::vector<int> incremental_schedule(int n_points, int increments);

struct TrainConfig {
    long epochs = 100000;
    int increments = 5;
    AdamConfig adam{};
    /// When > 0, stop the run early once the full-batch cost over the complete
    /// training set drops below this value. Off by default.
    double stop_below = 0.0;
};

struct IncrementRecord {
    int prefix = 0;       // number of active training points
    long epochs = 0;      // epochs spent on this prefix
    double end_cost = 0;  // cost over the active points at the last epoch
};

struct TrainResult {
    double e_tp = 0.0;  // cost over the full training grid, final weights
    long epochs_run = 0;
    bool diverged = false;
    long divergence_epoch = -1;  // 1-based epoch at which training aborted
    bool stopped_early = false;
    std::vector<IncrementRecord> increments;
};

/// Full-batch training of the model on the grid's training points: the epoch
/// budget is split evenly across the incremental-learning prefixes (integer
/// division, remainder to the last prefix); weights persist across prefixes
/// while the Adam moments restart with each prefix. Each epoch is one
/// cost+gradient evaluation over the active points followed by one Adam
/// update. epochs = 0 leaves the model untouched.
TrainResult train(ScnfModel& model, const IvpProblem& problem, const SubdomainGrid& grid,
                  const TrainConfig& config);

}  // namespace andre
