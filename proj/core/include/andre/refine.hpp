#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "andre/optimizer.hpp"
#include "andre/problem.hpp"
#include "andre/scnf.hpp"

namespace andre {

struct AttemptRecord;

/// Knobs of the adaptive refinement loop. The defaults are the standard
/// computational parameters: five hidden neurons, zero initial weights,
/// learning rate 1e-3, 1e5 epochs, ten training and twelve verification
/// points, trial-solution order 5 and resize factor 0.5.
struct AndreConfig {
    double sigma = 1e-3;              // verification error bound
    double delta = 0.5;               // subdomain resize factor, in (0,1)
    double min_subdomain_size = 0.1;  // width guard of the complex conditions
    int n_tp = 9;
    int n_vp = 11;
    int order = 5;  // polynomial order m of the trial solution
    Ansatz ansatz = Ansatz::HardIC;
    TrainConfig train{};

    /// Learning-rate escalation used by the parameter adjustment; rung 0 is
    /// the initial rate. Once the ladder is exhausted the hidden layer grows
    /// by neuron_increment and the rate drops back to rung 0.
    std::vector<double> alpha_ladder = {1e-3, 6e-3, 3.6e-2};
    int hidden_base = 5;
    int neuron_increment = 2;
    int hidden_cap = 51;  // growing past this aborts the run

    /// Stop a training attempt once its full-batch cost is below 0.1*sigma.
    bool early_stop = false;

    /// Hard safety stop for pathological configurations.
    long max_total_attempts = 1000000;

    /// Optional observer called after every training attempt.
    std::function<void(const AttemptRecord&)> on_attempt;

    void validate() const;  // throws std::invalid_argument
};

/// Mutable loop state: the boundary list t_1 < ... < t_{h+1} (first and last
/// pinned to the problem domain), the active subdomain index and the
/// adjustable parameters for that subdomain.
struct RefinementState {
    std::vector<double> boundaries;
    int current = 1;  // l, 1-based
    int ladder_rung = 0;
    int hidden_count = 5;
    int attempts_on_current = 0;
    /// Verification error of the immediately preceding attempt on the current
    /// subdomain; NaN when this subdomain has not been attempted yet.
    double prev_e_vp = std::numeric_limits<double>::quiet_NaN();

    int total() const { return int(boundaries.size()) - 1; }  // h
    double t_left() const { return boundaries[size_t(current) - 1]; }
    double t_right() const { return boundaries[size_t(current)]; }
    double width() const { return t_right() - t_left(); }
};

/// Splits the rightmost subdomain: the new interior boundary lands at
/// t_l + delta*(t_end - t_l) and the released right part becomes subdomain
/// l+1. Requires current == total().
void split_rightmost(RefinementState& state, double delta);

/// Shrinks the current (already split) subdomain by moving its right boundary
/// to t_l + delta*(t_{l+1} - t_l); the neighbour absorbs the released
/// interval. Requires current < total().
void reduce_subdomain(RefinementState& state, double delta);

/// The guard evaluated before a size reduction: true when the subdomain is
/// already at or below the minimum width, or when the verification error did
/// not improve relative to the previous attempt on this subdomain. True
/// routes to the parameter adjustment, false to a size reduction.
bool complex_conditions(const RefinementState& state, double current_e_vp, double min_width);

/// Advances the learning-rate ladder, or -- once exhausted -- grows the
/// hidden layer and resets the rate. Returns false when the neuron cap would
/// be exceeded (the caller aborts).
bool adjust_parameters(RefinementState& state, const AndreConfig& config);

/// Verification error: the cost evaluated on the verification points with
/// frozen weights. Non-finite results map to +infinity so a diverged model
/// always fails verification.
double verify(const ScnfModel& model, const IvpProblem& problem, const SubdomainGrid& grid);

/// Trial-solution value at a subdomain boundary; the next subdomain's
/// initial value.
std::vector<double> handoff(const ScnfModel& model, double t_boundary);

enum class RunStatus { Completed, Aborted };
enum class AttemptAction { Accept, Split, Reduce, Adjust, Abort };
enum class ReferenceKind { Analytic, Rk4, None };

/// One row of the refinement trace: a full training attempt and what the
/// loop decided afterwards.
struct AttemptRecord {
    int subdomain = 1;
    double t_left = 0, t_right = 0;
    double e_tp = 0, e_vp = 0;
    double alpha = 0;
    int hidden = 0;
    int attempt = 1;  // 1-based within the subdomain
    long epochs = 0;
    AttemptAction action = AttemptAction::Accept;
};

/// A verified subdomain as it appears in reports and CSV exports.
struct SubdomainRecord {
    int index = 1;
    double t_left = 0, t_right = 0;
    double e_tp = 0, e_vp = 0;
    int hidden = 0;
    double alpha = 0;
    int attempts = 1;
    std::optional<double> err_l1;    // vs reference, when available
    std::optional<double> err_linf;
};

/// Verified subdomain with its trained model; handoff is the trial value at
/// t_right and equals the next piece's initial value exactly.
struct SolutionPiece {
    double t_left = 0, t_right = 0;
    ScnfModel model;
    std::vector<double> handoff;

    bool covers(double t) const { return t >= t_left && t <= t_right; }
};

struct SolutionRow {
    int subdomain = 1;
    double t = 0;
    bool is_left_boundary = false;
    std::vector<double> u;
    std::vector<double> reference;  // empty when no reference is available
    std::vector<double> abs_error;
};

struct RunAggregates {
    int h = 0;
    std::optional<double> err_l1;
    std::optional<double> err_linf;
    double mean_e_vp = std::numeric_limits<double>::quiet_NaN();
    double mean_e_tp = std::numeric_limits<double>::quiet_NaN();
    long total_epochs = 0;
    double wall_seconds = 0;
};

struct RunReport {
    std::string problem;
    int dimension = 1;
    std::vector<double> initial_value;
    AndreConfig config;
    RunStatus status = RunStatus::Completed;
    std::string abort_reason;
    ReferenceKind reference = ReferenceKind::None;
    std::vector<double> boundaries;
    std::vector<SubdomainRecord> subdomains;
    std::vector<AttemptRecord> attempts;
    std::vector<SolutionPiece> pieces;
    std::vector<SolutionRow> solution;
    RunAggregates aggregates;
};

/// Runs the full adaptive refinement on the problem's domain: train the
/// current subdomain, verify against sigma, then accept/split/reduce/adjust
/// until the whole domain is verified or the neuron cap aborts the run.
/// The returned report carries every verified piece, the attempt trace and
/// error metrics against the best available reference.
RunReport run(const IvpProblem& problem, const AndreConfig& config);

/// Evaluates the assembled solution at t using the piece covering t (pieces
/// are half-open from the left; boundaries belong to the left piece). Outside
/// every piece the nearest piece extrapolates and *extrapolated is set.
std::vector<double> evaluate_solution(const RunReport& report, double t,
                                      bool* extrapolated = nullptr);

}  // namespace andre
