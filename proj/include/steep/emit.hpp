#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "steep/coding.hpp"
#include "steep/feasibility.hpp"
#include "steep/montecarlo.hpp"
#include "steep/optimize.hpp"
#include "steep/params.hpp"
#include "steep/privacy.hpp"
#include "steep/secrecy.hpp"
#include "steep/units.hpp"

namespace steep {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string fmt_seed(std::uint64_t seed) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(seed));
    return buf;
}

// ---------------------------------------------------------------------------
// Secrecy report

inline nlohmann::json to_json(const SystemParams& p) {
    return {{"p1_db", linear_to_db(p.p1)}, {"p2_db", linear_to_db(p.p2)},
            {"alpha1", p.alpha1},          {"alpha2", p.alpha2},
            {"c1_sq", p.c1_sq},            {"c2_sq", c2_sq(p)}};
}

inline nlohmann::json to_json(const SecrecyReport& r) {
    return {{"mse_user", r.mse_user}, {"mse_eve", r.mse_eve}, {"cap_user", r.cap_user},
            {"cap_eve", r.cap_eve},   {"rs", r.rs},           {"rs_plus", r.rs_plus}};
}

// ---------------------------------------------------------------------------
// Distance sweep: fixed column set shared by both modes.

inline constexpr const char* kSweepCsvHeader = "d,rs_hat_plus,rs_bar,c1_sq_star,p1_star_db,rs_star";

inline std::string to_csv(const DistanceSweep& s) {
    std::string out = std::string(kSweepCsvHeader) + "\n";
    for (const auto& r : s.records) {
        out += fmt_double(r.d) + "," + fmt_double(r.rs_hat_plus) + "," + fmt_double(r.rs_bar) +
               "," + fmt_double(r.c1_sq_star) + "," + fmt_double(r.p1_star_db) + "," +
               fmt_double(r.rs_star) + "\n";
    }
    return out;
}

inline nlohmann::json to_json(const DistanceSweep& s) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : s.records)
        records.push_back({{"d", r.d},
                           {"rs_hat_plus", r.rs_hat_plus},
                           {"rs_bar", r.rs_bar},
                           {"c1_sq_star", r.c1_sq_star},
                           {"p1_star_db", r.p1_star_db},
                           {"rs_star", r.rs_star}});
    return {{"mode", s.config.mode == SweepMode::kFixedFromReference ? "fixed" : "joint"},
            {"p2_db", linear_to_db(s.config.p2)},
            {"d0", s.config.d0},
            {"path_loss_exponent", s.config.path_loss_exponent},
            {"eta", s.config.eta},
            {"records", records}};
}

// ---------------------------------------------------------------------------
// Rate surface (long format).

inline constexpr const char* kSurfaceCsvHeader = "p1_db,c1_sq,rs";

inline std::string to_csv(const std::vector<SurfacePoint>& pts) {
    std::string out = std::string(kSurfaceCsvHeader) + "\n";
    for (const auto& p : pts)
        out += fmt_double(p.p1_db) + "," + fmt_double(p.c1_sq) + "," + fmt_double(p.rs) + "\n";
    return out;
}

inline nlohmann::json to_json(const std::vector<SurfacePoint>& pts) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : pts) a.push_back({{"p1_db", p.p1_db}, {"c1_sq", p.c1_sq}, {"rs", p.rs}});
    return a;
}

// ---------------------------------------------------------------------------
// Feasible region: both axes as header rows, then the 0/1 matrix with one
// row per axis1 value.

inline std::string to_csv(const FeasibleRegionGrid& g) {
    std::string out = "axis1," + g.axis1_name + "\n";
    for (std::size_t i = 0; i < g.axis1_values.size(); ++i)
        out += (i ? "," : "") + fmt_double(g.axis1_values[i]);
    out += "\naxis2," + g.axis2_name + "\n";
    for (std::size_t j = 0; j < g.axis2_values.size(); ++j)
        out += (j ? "," : "") + fmt_double(g.axis2_values[j]);
    out += "\n";
    for (const auto& row : g.feasible) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ",";
            out += row[j] ? "1" : "0";
        }
        out += "\n";
    }
    return out;
}

inline nlohmann::json to_json(const FeasibleRegionGrid& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : g.feasible) {
        nlohmann::json r = nlohmann::json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        rows.push_back(std::move(r));
    }
    return {{"axis1", {{"name", g.axis1_name}, {"values", g.axis1_values}}},
            {"axis2", {{"name", g.axis2_name}, {"values", g.axis2_values}}},
            {"feasible", rows}};
}

// ---------------------------------------------------------------------------
// Code pairs.

inline constexpr const char* kCodesCsvHeader =
    "rank,rate,m,bits_per_symbol,ce_over_r,cu_over_r,lower_margin,upper_margin";

inline std::string to_csv(const std::vector<CodePair>& pairs, double cap_user, double cap_eve) {
    std::string out = std::string(kCodesCsvHeader) + "\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const double inv_rate = 1.0 / p.rate.value();
        out += std::to_string(i + 1) + "," + p.rate.str() + "," + std::to_string(p.m) + "," +
               std::to_string(p.bits_per_symbol) + "," + fmt_double(cap_eve * inv_rate) + "," +
               fmt_double(cap_user * inv_rate) + "," + fmt_double(p.lower_margin) + "," +
               fmt_double(p.upper_margin) + "\n";
    }
    return out;
}

inline nlohmann::json to_json(const std::vector<CodePair>& pairs, double cap_user,
                              double cap_eve) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : pairs) {
        const double inv_rate = 1.0 / p.rate.value();
        a.push_back({{"rate", p.rate.str()},
                     {"m", p.m},
                     {"bits_per_symbol", p.bits_per_symbol},
                     {"ce_over_r", cap_eve * inv_rate},
                     {"cu_over_r", cap_user * inv_rate},
                     {"lower_margin", p.lower_margin},
                     {"upper_margin", p.upper_margin}});
    }
    return {{"cap_user", cap_user}, {"cap_eve", cap_eve}, {"pairs", a}};
}

/// Aligned text table for terminal output.
inline std::string to_table(const std::vector<CodePair>& pairs, double cap_user, double cap_eve) {
    char line[160];
    std::string out;
    std::snprintf(line, sizeof line, "%-5s %-6s %-6s %-5s %-10s %-10s %-12s %-12s\n", "rank",
                  "rate", "M", "bits", "C_E/R", "C_U/R", "lower", "upper");
    out += line;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const double inv_rate = 1.0 / p.rate.value();
        std::snprintf(line, sizeof line, "%-5zu %-6s %-6llu %-5d %-10.4f %-10.4f %-12.4f %-12.4f\n",
                      i + 1, p.rate.str().c_str(), static_cast<unsigned long long>(p.m),
                      p.bits_per_symbol, cap_eve * inv_rate, cap_user * inv_rate, p.lower_margin,
                      p.upper_margin);
        out += line;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Transcript dump for offline inspection.

inline std::string transcript_csv_header(const SessionTranscript& t) {
    const SystemParams& p = t.params;
    return "# p1=" + fmt_double(p.p1) + " p2=" + fmt_double(p.p2) + " alpha1=" +
           fmt_double(p.alpha1) + " alpha2=" + fmt_double(p.alpha2) + " c1_sq=" +
           fmt_double(p.c1_sq) + " K=" + std::to_string(t.size()) + " seed=" + fmt_seed(t.seed) +
           "\n"
           "k,x1_re,x1_im,w1_re,w1_im,y1_re,y1_im,s2_re,s2_im,x2_re,x2_im,w2_re,w2_im,"
           "y2_re,y2_im,v1_re,v1_im,z1_re,z1_im,v2_re,v2_im,z2_re,z2_im\n";
}

inline std::string to_csv(const SessionTranscript& t) {
    std::string out = transcript_csv_header(t);
    auto put = [&out](const std::complex<double>& c) {
        out += "," + fmt_double(c.real()) + "," + fmt_double(c.imag());
    };
    for (std::size_t k = 0; k < t.size(); ++k) {
        out += std::to_string(k);
        put(t.x1[k]);
        put(t.w1[k]);
        put(t.y1[k]);
        put(t.s2[k]);
        put(t.x2[k]);
        put(t.w2[k]);
        put(t.y2[k]);
        put(t.v1[k]);
        put(t.z1[k]);
        put(t.v2[k]);
        put(t.z2[k]);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Key-generation report.

inline nlohmann::json to_json(const SessionOutcome& s) {
    auto num_or_null = [](double v) {
        return std::isnan(v) ? nlohmann::json() : nlohmann::json(v);
    };
    return {{"cap_user", s.cap_user},
            {"cap_eve", s.cap_eve},
            {"user_gate", s.user_gate},
            {"eve_gate", s.eve_gate},
            {"empirical_mse_user", num_or_null(s.emp_user.mse)},
            {"empirical_mse_eve", num_or_null(s.emp_eve.mse)}};
}

inline nlohmann::json to_json(const KeygenResult& r, const KeygenScenario& sc) {
    nlohmann::json j{{"scenario",
                      {{"p1_db", linear_to_db(sc.p1)},
                       {"p2_db", linear_to_db(sc.p2)},
                       {"d", sc.geometry.d},
                       {"d0", sc.d0},
                       {"path_loss_exponent", sc.geometry.path_loss_exponent},
                       {"eta", sc.geometry.eta},
                       {"K", sc.K},
                       {"code_rate", sc.pair.rate.str()},
                       {"m", sc.pair.m},
                       {"noise_seed", fmt_seed(sc.noise_seed)},
                       {"payload_seed", fmt_seed(sc.payload_seed)},
                       {"hash_seed", fmt_seed(sc.hash_seed)}}},
                     {"c1_sq", r.report.c1_sq},
                     {"rbar", r.report.rbar},
                     {"payload_bits", r.report.payload_bits},
                     {"key_bits", r.report.key_bits},
                     {"forward_session", to_json(r.report.forward)},
                     {"reverse_session", to_json(r.report.reverse)},
                     {"success", r.report.success}};
    if (r.report.success)
        j["key_hex"] = r.key.bits.to_hex();
    else
        j["failure"] = r.report.failure;
    return j;
}

}  // namespace steep
