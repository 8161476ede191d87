#include "andre/refine.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "andre/metrics.hpp"

namespace andre {

void AndreConfig::validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("AndreConfig: sigma must be > 0");
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("AndreConfig: delta must lie in (0,1)");
    }
    if (!(min_subdomain_size > 0.0)) {
        throw std::invalid_argument("AndreConfig: min_subdomain_size must be > 0");
    }
    if (n_tp < 1 || n_vp < 1) throw std::invalid_argument("AndreConfig: n_tp/n_vp must be >= 1");
    if (order < 1) throw std::invalid_argument("AndreConfig: order must be >= 1");
    if (train.epochs < 1) throw std::invalid_argument("AndreConfig: epochs must be >= 1");
    if (train.increments < 1) throw std::invalid_argument("AndreConfig: increments must be >= 1");
    if (alpha_ladder.empty()) throw std::invalid_argument("AndreConfig: empty learning-rate ladder");
    for (size_t i = 0; i < alpha_ladder.size(); ++i) {
        if (!(alpha_ladder[i] > 0.0)) {
            throw std::invalid_argument("AndreConfig: ladder rates must be > 0");
        }
        if (i > 0 && !(alpha_ladder[i] > alpha_ladder[i - 1])) {
            throw std::invalid_argument("AndreConfig: ladder must be strictly increasing");
        }
    }
    if (hidden_base < 1) throw std::invalid_argument("AndreConfig: hidden_base must be >= 1");
    if (neuron_increment < 1) {
        throw std::invalid_argument("AndreConfig: neuron_increment must be >= 1");
    }
    if (hidden_cap < hidden_base) {
        throw std::invalid_argument("AndreConfig: hidden_cap below hidden_base");
    }
}

void split_rightmost(RefinementState& state, double delta) {
    assert(state.current == state.total());
    const double left = state.t_left();
    const double right = state.t_right();
    const double cut = left + delta * (right - left);
    state.boundaries.insert(state.boundaries.begin() + state.current, cut);
}

void reduce_subdomain(RefinementState& state, double delta) {
    assert(state.current < state.total());
    const double left = state.t_left();
    state.boundaries[size_t(state.current)] = left + delta * (state.t_right() - left);
}

bool complex_conditions(const RefinementState& state, double current_e_vp, double min_width) {
    if (state.width() <= min_width) return true;
    return !std::isnan(state.prev_e_vp) && state.prev_e_vp <= current_e_vp;
}

bool adjust_parameters(RefinementState& state, const AndreConfig& config) {
    if (state.ladder_rung + 1 < int(config.alpha_ladder.size())) {
        ++state.ladder_rung;
        return true;
    }
    const int grown = state.hidden_count + config.neuron_increment;
    if (grown > config.hidden_cap) return false;
    state.hidden_count = grown;
    state.ladder_rung = 0;
    return true;
}

double verify(const ScnfModel& model, const IvpProblem& problem, const SubdomainGrid& grid) {
    const double e = cost(model, problem, grid.verification_points);
    return std::isfinite(e) ? e : std::numeric_limits<double>::infinity();
}

std::vector<double> handoff(const ScnfModel& model, double t_boundary) {
    return model.value(t_boundary);
}

RunReport run(const IvpProblem& problem, const AndreConfig& config) {
    config.validate();
    if (!(problem.t_start < problem.t_end)) {
        throw std::invalid_argument("run: problem domain is empty");
    }
    if (problem.initial_value.size() != size_t(problem.dimension)) {
        throw std::invalid_argument("run: initial value size does not match dimension");
    }
    const auto t_begin = std::chrono::steady_clock::now();

    RunReport report;
    report.problem = problem.name;
    report.dimension = problem.dimension;
    report.initial_value = problem.initial_value;
    report.config = config;

    RefinementState state;
    state.boundaries = {problem.t_start, problem.t_end};
    state.current = 1;
    state.hidden_count = config.hidden_base;

    std::vector<double> u0 = problem.initial_value;
    long total_attempts = 0;

    while (true) {
        if (total_attempts >= config.max_total_attempts) {
            report.status = RunStatus::Aborted;
            report.abort_reason = "attempt budget exhausted";
            break;
        }
        ++total_attempts;

        const double t_left = state.t_left();
        const double t_right = state.t_right();
        const auto grid = make_grid(t_left, t_right, config.n_tp, config.n_vp);

        // Fresh zero-initialised networks on every attempt; the adjustable
        // parameters enter here and nowhere inside the optimisation cycle.
        ScnfModel model(config.order, config.ansatz, problem.dimension, state.hidden_count, u0,
                        t_left);
        TrainConfig tc = config.train;
        tc.adam.alpha = config.alpha_ladder[size_t(state.ladder_rung)];
        if (config.early_stop) tc.stop_below = 0.1 * config.sigma;

        const TrainResult trained = train(model, problem, grid, tc);
        const double e_vp = trained.diverged ? std::numeric_limits<double>::infinity()
                                             : verify(model, problem, grid);
        ++state.attempts_on_current;
        report.aggregates.total_epochs += trained.epochs_run;

        AttemptRecord attempt;
        attempt.subdomain = state.current;
        attempt.t_left = t_left;
        attempt.t_right = t_right;
        attempt.e_tp = trained.e_tp;
        attempt.e_vp = e_vp;
        attempt.alpha = tc.adam.alpha;
        attempt.hidden = state.hidden_count;
        attempt.attempt = state.attempts_on_current;
        attempt.epochs = trained.epochs_run;

        if (e_vp <= config.sigma) {
            attempt.action = AttemptAction::Accept;

            SubdomainRecord rec;
            rec.index = state.current;
            rec.t_left = t_left;
            rec.t_right = t_right;
            rec.e_tp = trained.e_tp;
            rec.e_vp = e_vp;
            rec.hidden = state.hidden_count;
            rec.alpha = tc.adam.alpha;
            rec.attempts = state.attempts_on_current;
            report.subdomains.push_back(rec);

            std::vector<double> carry = handoff(model, t_right);
            report.pieces.push_back(SolutionPiece{t_left, t_right, std::move(model), carry});

            report.attempts.push_back(attempt);
            if (config.on_attempt) config.on_attempt(attempt);

            if (state.current == state.total()) break;  // whole domain verified

            // Advance and reset every adjusted parameter to its initial value.
            u0 = carry;
            ++state.current;
            state.ladder_rung = 0;
            state.hidden_count = config.hidden_base;
            state.attempts_on_current = 0;
            state.prev_e_vp = std::numeric_limits<double>::quiet_NaN();
            continue;
        }

        if (state.current == state.total()) {
            attempt.action = AttemptAction::Split;
            split_rightmost(state, config.delta);
        } else if (complex_conditions(state, e_vp, config.min_subdomain_size)) {
            if (adjust_parameters(state, config)) {
                attempt.action = AttemptAction::Adjust;
            } else {
                attempt.action = AttemptAction::Abort;
                report.status = RunStatus::Aborted;
                report.abort_reason = "hidden neuron cap exceeded";
                report.attempts.push_back(attempt);
                if (config.on_attempt) config.on_attempt(attempt);
                break;
            }
        } else {
            attempt.action = AttemptAction::Reduce;
            reduce_subdomain(state, config.delta);
        }
        state.prev_e_vp = e_vp;
        report.attempts.push_back(attempt);
        if (config.on_attempt) config.on_attempt(attempt);
    }

    report.boundaries = state.boundaries;
    report.reference = fill_errors(report, problem);
    report.aggregates.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();
    return report;
}

std::vector<double> evaluate_solution(const RunReport& report, double t, bool* extrapolated) {
    if (report.pieces.empty()) {
        throw std::logic_error("evaluate_solution: report has no verified pieces");
    }
    if (extrapolated) *extrapolated = false;
    const SolutionPiece* best = nullptr;
    for (const auto& piece : report.pieces) {
        if (piece.covers(t)) {
            // Shared boundaries belong to the left piece, whose trained model
            // produced the handoff value there.
            if (!best || piece.t_left < t) best = &piece;
        }
    }
    if (!best) {
        if (extrapolated) *extrapolated = true;
        best = &report.pieces.front();
        for (const auto& piece : report.pieces) {
            const double d_best = std::min(std::abs(t - best->t_left), std::abs(t - best->t_right));
            const double d_here = std::min(std::abs(t - piece.t_left), std::abs(t - piece.t_right));
            if (d_here < d_best) best = &piece;
        }
    }
    return best->model.value(t);
}

}  // namespace andre
