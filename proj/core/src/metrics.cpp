#include "andre/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "andre/rk4.hpp"

namespace andre {

std::pair<double, double> subdomain_errors(const SolutionPiece& piece, const ReferenceFn& reference,
                                           int n_tp) {
    const auto grid = make_grid(piece.t_left, piece.t_right, n_tp, n_tp);
    const size_t o = size_t(piece.model.equations());
    std::vector<double> u(o), ref(o);
    double sum = 0.0;
    double worst = 0.0;
    for (const double t : grid.training_points) {
        piece.model.value(t, u);
        reference(t, ref);
        double point_err = 0.0;
        for (size_t q = 0; q < o; ++q) {
            point_err += std::abs(ref[q] - u[q]);
        }
        point_err /= double(o);
        sum += point_err;
        worst = std::max(worst, point_err);
    }
    return {sum / double(grid.training_points.size()), worst};
}

std::pair<double, double> aggregate_errors(std::span<const SubdomainRecord> subdomains) {
    double l1 = 0.0, linf = 0.0;
    size_t counted = 0;
    for (const auto& s : subdomains) {
        if (!s.err_l1 || !s.err_linf) continue;
        l1 += *s.err_l1;
        linf += *s.err_linf;
        ++counted;
    }
    if (counted == 0) return {0.0, 0.0};
    return {l1 / double(counted), linf / double(counted)};
}

ReferenceKind fill_errors(RunReport& report, const IvpProblem& problem) {
    ReferenceFn reference;
    ReferenceKind kind = ReferenceKind::None;
    Rk4Trajectory baseline;
    if (problem.has_analytic()) {
        reference = problem.analytic;
        kind = ReferenceKind::Analytic;
    } else if (problem.has_rhs()) {
        baseline = rk4_solve(problem, 1000);
        reference = [&baseline](double t, std::span<double> u) {
            const auto v = baseline.at(t);
            std::copy(v.begin(), v.end(), u.begin());
        };
        kind = ReferenceKind::Rk4;
    }

    for (size_t i = 0; i < report.pieces.size(); ++i) {
        if (!reference) break;
        const auto [l1, linf] = subdomain_errors(report.pieces[i], reference, report.config.n_tp);
        report.subdomains[i].err_l1 = l1;
        report.subdomains[i].err_linf = linf;
    }

    // Per-point solution table: every piece evaluated at its own training
    // points, so shared boundaries appear once per adjacent piece.
    report.solution.clear();
    const size_t o = size_t(report.dimension);
    std::vector<double> ref(o);
    for (const auto& piece : report.pieces) {
        const auto grid = make_grid(piece.t_left, piece.t_right, report.config.n_tp, 1);
        for (size_t i = 0; i < grid.training_points.size(); ++i) {
            const double t = grid.training_points[i];
            SolutionRow row;
            row.subdomain = int(&piece - report.pieces.data()) + 1;
            row.t = t;
            row.is_left_boundary = (i == 0);
            row.u = piece.model.value(t);
            if (reference) {
                reference(t, ref);
                row.reference.assign(ref.begin(), ref.end());
                row.abs_error.resize(o);
                for (size_t q = 0; q < o; ++q) {
                    row.abs_error[q] = std::abs(ref[q] - row.u[q]);
                }
            }
            report.solution.push_back(std::move(row));
        }
    }

    auto& agg = report.aggregates;
    agg.h = int(report.subdomains.size());
    if (kind != ReferenceKind::None && !report.subdomains.empty()) {
        const auto [l1, linf] = aggregate_errors(report.subdomains);
        agg.err_l1 = l1;
        agg.err_linf = linf;
    }
    if (!report.subdomains.empty()) {
        double evp = 0.0, etp = 0.0;
        for (const auto& s : report.subdomains) {
            evp += s.e_vp;
            etp += s.e_tp;
        }
        agg.mean_e_vp = evp / double(report.subdomains.size());
        agg.mean_e_tp = etp / double(report.subdomains.size());
    }
    return kind;
}

}  // namespace andre
