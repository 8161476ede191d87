#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "andre/refine.hpp"

namespace andre {

enum class SweepParam { Sigma, Delta };

struct SweepRow {
    double value = 0;
    RunStatus status = RunStatus::Completed;
    int h = 0;
    std::optional<double> err_l1;
    double mean_e_vp = 0;
    double mean_e_tp = 0;
};

struct SweepResult {
    SweepParam param = SweepParam::Sigma;
    std::vector<SweepRow> rows;      // one per value, in input order
    std::vector<RunReport> reports;  // aligned with rows
};

/// Runs the refinement once per parameter value, each run independent and
/// deterministic. Runs execute in parallel worker threads; max_workers = 0
/// takes the limit from the ANDRE_THREADS environment variable, defaulting
/// to the hardware thread count. A run that aborts is recorded in its row
/// and the sweep continues.
SweepResult sweep(const IvpProblem& problem, const AndreConfig& base, SweepParam param,
                  std::span<const double> values, unsigned max_workers = 0);

namespace io {
/// One-row-per-value table: value,status,h,l1,mean_E_VP,mean_E_TP.
void write_sweep_csv(const SweepResult& result, const std::filesystem::path& path);
}  // namespace io

}  // namespace andre
