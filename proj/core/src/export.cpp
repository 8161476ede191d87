#include "andre/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace andre::io {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string to_string(Ansatz a) { return a == Ansatz::HardIC ? "hard" : "learned"; }

std::string to_string(RunStatus s) {
    return s == RunStatus::Completed ? "completed" : "aborted";
}

std::string to_string(AttemptAction a) {
    switch (a) {
        case AttemptAction::Accept: return "accept";
        case AttemptAction::Split: return "split";
        case AttemptAction::Reduce: return "reduce";
        case AttemptAction::Adjust: return "adjust";
        case AttemptAction::Abort: return "abort";
    }
    return "?";
}

std::string to_string(ReferenceKind k) {
    switch (k) {
        case ReferenceKind::Analytic: return "analytic";
        case ReferenceKind::Rk4: return "rk4";
        case ReferenceKind::None: return "none";
    }
    return "?";
}

namespace {

using nlohmann::json;

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    return out;
}

json opt_num(const std::optional<double>& v) {
    if (v && std::isfinite(*v)) return *v;
    return nullptr;
}

json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

json config_json(const AndreConfig& c) {
    return json{{"sigma", c.sigma},
                {"delta", c.delta},
                {"min_subdomain_size", c.min_subdomain_size},
                {"n_tp", c.n_tp},
                {"n_vp", c.n_vp},
                {"order", c.order},
                {"ansatz", to_string(c.ansatz)},
                {"epochs", c.train.epochs},
                {"increments", c.train.increments},
                {"adam", json{{"beta1", c.train.adam.beta1},
                              {"beta2", c.train.adam.beta2},
                              {"epsilon", c.train.adam.epsilon}}},
                {"alpha_ladder", c.alpha_ladder},
                {"hidden_base", c.hidden_base},
                {"neuron_increment", c.neuron_increment},
                {"hidden_cap", c.hidden_cap},
                {"early_stop", c.early_stop}};
}

void write_summary(const RunReport& r, const std::filesystem::path& path) {
    json j;
    j["schema"] = 1;
    j["status"] = to_string(r.status);
    if (!r.abort_reason.empty()) j["abort_reason"] = r.abort_reason;
    j["problem"] = json{{"name", r.problem},
                        {"dimension", r.dimension},
                        {"initial_value", r.initial_value},
                        {"reference", to_string(r.reference)}};
    j["config"] = config_json(r.config);
    j["boundaries"] = r.boundaries;

    json subs = json::array();
    for (const auto& s : r.subdomains) {
        subs.push_back(json{{"l", s.index},
                            {"t_left", s.t_left},
                            {"t_right", s.t_right},
                            {"e_tp", s.e_tp},
                            {"e_vp", s.e_vp},
                            {"hidden", s.hidden},
                            {"alpha", s.alpha},
                            {"attempts", s.attempts},
                            {"err_l1", opt_num(s.err_l1)},
                            {"err_linf", opt_num(s.err_linf)}});
    }
    j["subdomains"] = std::move(subs);

    json attempts = json::array();
    for (const auto& a : r.attempts) {
        attempts.push_back(json{{"l", a.subdomain},
                                {"t_left", a.t_left},
                                {"t_right", a.t_right},
                                {"e_tp", finite_or_null(a.e_tp)},
                                {"e_vp", finite_or_null(a.e_vp)},
                                {"alpha", a.alpha},
                                {"hidden", a.hidden},
                                {"attempt", a.attempt},
                                {"epochs", a.epochs},
                                {"action", to_string(a.action)}});
    }
    j["attempts"] = std::move(attempts);

    json rows = json::array();
    for (const auto& row : r.solution) {
        json entry{{"l", row.subdomain},
                   {"t", row.t},
                   {"is_left_boundary", row.is_left_boundary},
                   {"u", row.u}};
        if (!row.reference.empty()) {
            entry["ref"] = row.reference;
            entry["abs_err"] = row.abs_error;
        }
        rows.push_back(std::move(entry));
    }
    j["solution"] = std::move(rows);

    const auto& a = r.aggregates;
    j["aggregates"] = json{{"h", a.h},
                           {"err_l1", opt_num(a.err_l1)},
                           {"err_linf", opt_num(a.err_linf)},
                           {"mean_e_vp", finite_or_null(a.mean_e_vp)},
                           {"mean_e_tp", finite_or_null(a.mean_e_tp)},
                           {"total_epochs", a.total_epochs},
                           {"wall_seconds", a.wall_seconds}};

    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_subdomains_csv(const RunReport& r, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "l,t_left,t_right,E_TP,E_VP,H,alpha,attempts,l1,linf\n";
    for (const auto& s : r.subdomains) {
        out << s.index << ',' << format_double(s.t_left) << ',' << format_double(s.t_right) << ','
            << format_double(s.e_tp) << ',' << format_double(s.e_vp) << ',' << s.hidden << ','
            << format_double(s.alpha) << ',' << s.attempts << ','
            << (s.err_l1 ? format_double(*s.err_l1) : "") << ','
            << (s.err_linf ? format_double(*s.err_linf) : "") << '\n';
    }
}

void write_boundaries_csv(const RunReport& r, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "index,t\n";
    for (size_t i = 0; i < r.boundaries.size(); ++i) {
        out << (i + 1) << ',' << format_double(r.boundaries[i]) << '\n';
    }
}

void write_solution_csv(const RunReport& r, const std::filesystem::path& path) {
    auto out = open_out(path);
    const bool with_ref = !r.solution.empty() && !r.solution.front().reference.empty();
    const int o = r.dimension;
    out << "l,t,is_left_boundary";
    for (int q = 1; q <= o; ++q) out << ",u_" << q;
    if (with_ref) {
        for (int q = 1; q <= o; ++q) out << ",ref_" << q;
        for (int q = 1; q <= o; ++q) out << ",abs_err_" << q;
    }
    out << '\n';
    for (const auto& row : r.solution) {
        out << row.subdomain << ',' << format_double(row.t) << ','
            << (row.is_left_boundary ? 1 : 0);
        for (const double v : row.u) out << ',' << format_double(v);
        if (with_ref) {
            for (const double v : row.reference) out << ',' << format_double(v);
            for (const double v : row.abs_error) out << ',' << format_double(v);
        }
        out << '\n';
    }
}

}  // namespace

void write_report(const RunReport& report, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create directory: " + out_dir.string() + " (" +
                                 ec.message() + ")");
    }
    write_summary(report, out_dir / "summary.json");
    write_subdomains_csv(report, out_dir / "subdomains.csv");
    write_solution_csv(report, out_dir / "solution.csv");
    write_boundaries_csv(report, out_dir / "boundaries.csv");
}

RunAggregates read_summary_aggregates(const std::filesystem::path& summary_json) {
    std::ifstream in(summary_json);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + summary_json.string());
    }
    const auto j = nlohmann::json::parse(in);
    const auto& a = j.at("aggregates");
    RunAggregates out;
    out.h = a.at("h").get<int>();
    if (!a.at("err_l1").is_null()) out.err_l1 = a.at("err_l1").get<double>();
    if (!a.at("err_linf").is_null()) out.err_linf = a.at("err_linf").get<double>();
    if (!a.at("mean_e_vp").is_null()) out.mean_e_vp = a.at("mean_e_vp").get<double>();
    if (!a.at("mean_e_tp").is_null()) out.mean_e_tp = a.at("mean_e_tp").get<double>();
    out.total_epochs = a.at("total_epochs").get<long>();
    out.wall_seconds = a.at("wall_seconds").get<double>();
    return out;
}

}  // namespace andre::io
