#include "andre/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "andre/export.hpp"

namespace andre {

namespace {

unsigned resolve_workers(unsigned requested, size_t jobs) {
    unsigned limit = requested;
    if (limit == 0) {
        if (const char* env = std::getenv("ANDRE_THREADS")) {
            const long parsed = std::strtol(env, nullptr, 10);
            if (parsed > 0) limit = unsigned(parsed);
        }
        if (limit == 0) limit = std::max(1u, std::thread::hardware_concurrency());
    }
    return unsigned(std::min<size_t>(limit, jobs));
}

}  // namespace

SweepResult sweep(const IvpProblem& problem, const AndreConfig& base, SweepParam param,
                  std::span<const double> values, unsigned max_workers) {
    if (values.empty()) throw std::invalid_argument("sweep: no parameter values given");
    SweepResult result;
    result.param = param;
    result.rows.resize(values.size());
    result.reports.resize(values.size());

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= values.size()) return;
            AndreConfig cfg = base;
            cfg.on_attempt = nullptr;  // observers are not safe across workers
            if (param == SweepParam::Sigma) {
                cfg.sigma = values[i];
            } else {
                cfg.delta = values[i];
            }
            try {
                result.reports[i] = run(problem, cfg);
            } catch (const std::exception& e) {
                RunReport failed;
                failed.problem = problem.name;
                failed.config = cfg;
                failed.status = RunStatus::Aborted;
                failed.abort_reason = e.what();
                result.reports[i] = std::move(failed);
            }
        }
    };

    const unsigned workers = resolve_workers(max_workers, values.size());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (size_t i = 0; i < values.size(); ++i) {
        const auto& rep = result.reports[i];
        SweepRow row;
        row.value = values[i];
        row.status = rep.status;
        row.h = rep.aggregates.h;
        row.err_l1 = rep.aggregates.err_l1;
        row.mean_e_vp = rep.aggregates.mean_e_vp;
        row.mean_e_tp = rep.aggregates.mean_e_tp;
        result.rows[i] = row;
    }
    return result;
}

namespace io {

void write_sweep_csv(const SweepResult& result, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << (result.param == SweepParam::Sigma ? "sigma" : "delta")
        << ",status,h,l1,mean_E_VP,mean_E_TP\n";
    for (const auto& row : result.rows) {
        out << format_double(row.value) << ',' << to_string(row.status) << ',' << row.h << ','
            << (row.err_l1 ? format_double(*row.err_l1) : "") << ','
            << format_double(row.mean_e_vp) << ',' << format_double(row.mean_e_tp) << '\n';
    }
}

}  // namespace io

}  // namespace andre
