// Command-line front end: every analysis the library offers, as a subcommand
// that prints text, JSON or CSV. SNRs enter in dB and are converted once,
// here; everything behind this file is linear-scale.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "steep/steep.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct OutputOpts {
    bool as_json = false;
    bool as_csv = false;
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOpts& o, bool tabular) {
    cmd->add_flag("--json", o.as_json, "emit JSON");
    if (tabular) cmd->add_flag("--csv", o.as_csv, "emit CSV");
    cmd->add_option("--out", o.out_path, "write output to this path instead of stdout");
}

void write_output(const OutputOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path '" + o.out_path + "'");
    f << text;
}

std::uint64_t parse_seed_hex(const std::string& s) {
    std::string body = s;
    if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
    if (body.empty() || body.size() > 16 ||
        body.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
        throw std::invalid_argument("seed must be up to 16 hex digits, got '" + s + "'");
    return std::stoull(body, nullptr, 16);
}

std::uint64_t draw_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

/// Seed flag that is drawn from OS entropy when omitted and always echoed in
/// the output so a run can be reproduced.
struct SeedOpt {
    std::string text;
    std::uint64_t resolve() const { return text.empty() ? draw_seed() : parse_seed_hex(text); }
};

/// Geometry / advantage flags shared by most subcommands: either both
/// advantages directly, or the placement model they derive from.
struct GeometryOpts {
    double d = 0.5;
    double path_loss_exponent = 2.0;
    double eta = 1.0;
    std::optional<double> alpha1;
    std::optional<double> alpha2;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--d", d, "fractional Eve distance in (0,1)")->capture_default_str();
        cmd->add_option("--alpha", path_loss_exponent, "path-loss exponent in [1,2]")
            ->capture_default_str();
        cmd->add_option("--eta", eta, "wiretapper efficiency in (0,1]")->capture_default_str();
        cmd->add_option("--alpha1", alpha1,
                        "Eve's phase-1 advantage (overrides the placement model; needs --alpha2)");
        cmd->add_option("--alpha2", alpha2,
                        "Eve's phase-2 advantage (overrides the placement model; needs --alpha1)");
    }

    std::pair<double, double> resolve() const {
        if (alpha1.has_value() != alpha2.has_value())
            throw std::invalid_argument("--alpha1 and --alpha2 must be given together");
        if (alpha1) return {*alpha1, *alpha2};
        return steep::eve_advantages({d, path_loss_exponent, eta});
    }
};

std::string rate_text(const steep::SystemParams& p, const steep::SecrecyReport& r,
                      bool c1_optimized) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "p1 = %.4f dB  p2 = %.4f dB  alpha1 = %.6g  alpha2 = %.6g\n"
                  "c1_sq = %.6f (%s)  c2_sq = %.6f\n"
                  "MSE_U = %.6f  MSE_E = %.6f\n"
                  "C_U = %.6f  C_E = %.6f  bits/sample\n"
                  "R_s = %.6f  R_s+ = %.6f  bits per round-trip sample\n",
                  steep::linear_to_db(p.p1), steep::linear_to_db(p.p2), p.alpha1, p.alpha2,
                  p.c1_sq, c1_optimized ? "optimized" : "given", steep::c2_sq(p), r.mse_user,
                  r.mse_eve, r.cap_user, r.cap_eve, r.rs, r.rs_plus);
    return buf;
}

std::vector<steep::Rational> parse_rate_list(const std::string& csv) {
    std::vector<steep::Rational> rates;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) rates.push_back(steep::Rational::parse(item));
    if (rates.empty()) throw std::invalid_argument("rate list is empty");
    return rates;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Round-trip probe-echo secrecy toolkit: closed-form rates, feasibility maps,\n"
                 "parameter optimization, Monte Carlo validation, code-pair selection and\n"
                 "Toeplitz privacy amplification."};
    app.require_subcommand(1);
    std::function<int()> action;

    // ---------------------------------------------------------------- rate
    {
        auto* cmd = app.add_subcommand("rate", "secrecy report for one parameter point");
        auto p1_db = std::make_shared<double>(5.0);
        auto p2_db = std::make_shared<double>(20.0);
        auto c1_sq = std::make_shared<std::optional<double>>();
        auto geom = std::make_shared<GeometryOpts>();
        auto out = std::make_shared<OutputOpts>();
        cmd->add_option("--p1-db", *p1_db, "phase-1 probe SNR in dB")->required();
        cmd->add_option("--p2-db", *p2_db, "phase-2 echo SNR in dB")->required();
        cmd->add_option("--c1-sq", *c1_sq, "squared probe weight; omitted = optimized");
        geom->add_flags(cmd);
        add_output_flags(cmd, *out, false);
        cmd->callback([=, &action] {
            action = [=] {
                const double p1 = steep::db_to_linear(*p1_db);
                const double p2 = steep::db_to_linear(*p2_db);
                const auto [a1, a2] = geom->resolve();
                const bool optimized = !c1_sq->has_value();
                const double c1 =
                    optimized ? steep::optimize_c1(p1, p2, a1, a2).c1_sq_star : **c1_sq;
                const steep::SystemParams p{p1, p2, a1, a2, c1};
                p.validate();
                const auto report = steep::secrecy_report(p);
                if (out->as_json) {
                    json j{{"params", steep::to_json(p)},
                           {"report", steep::to_json(report)},
                           {"c1_optimized", optimized}};
                    write_output(*out, j.dump(2) + "\n");
                } else {
                    write_output(*out, rate_text(p, report, optimized));
                }
                return kExitOk;
            };
        });
    }

    // ------------------------------------------------------- sweep-surface
    {
        auto* cmd = app.add_subcommand("sweep-surface",
                                       "secrecy rate over a (p1, c1_sq) grid at fixed p2");
        auto cfg = std::make_shared<steep::SurfaceConfig>();
        auto p2_db = std::make_shared<double>(20.0);
        auto geom = std::make_shared<GeometryOpts>();
        auto out = std::make_shared<OutputOpts>();
        cmd->add_option("--p2-db", *p2_db, "phase-2 echo SNR in dB")->capture_default_str();
        cmd->add_option("--p1-lo-db", cfg->p1_lo_db, "lower p1 bound in dB")->capture_default_str();
        cmd->add_option("--p1-hi-db", cfg->p1_hi_db, "upper p1 bound in dB")->capture_default_str();
        cmd->add_option("--n-p1", cfg->n_p1, "p1 grid points")->capture_default_str();
        cmd->add_option("--n-c1", cfg->n_c1, "c1_sq grid points per p1")->capture_default_str();
        geom->add_flags(cmd);
        add_output_flags(cmd, *out, true);
        cmd->callback([=, &action] {
            action = [=] {
                cfg->p2 = steep::db_to_linear(*p2_db);
                std::tie(cfg->alpha1, cfg->alpha2) = geom->resolve();
                const auto pts = steep::rate_surface(*cfg);
                write_output(*out, out->as_json ? steep::to_json(pts).dump(2) + "\n"
                                                : steep::to_csv(pts));
                return kExitOk;
            };
        });
    }

    // ------------------------------------------------------ sweep-distance
    {
        auto* cmd = app.add_subcommand(
            "sweep-distance", "secrecy rates versus Eve distance (fixed or jointly optimal)");
        auto cfg = std::make_shared<steep::DistanceSweepConfig>();
        auto mode = std::make_shared<std::string>("fixed");
        auto p1_db = std::make_shared<double>(5.0);
        auto p2_db = std::make_shared<double>(20.0);
        auto out = std::make_shared<OutputOpts>();
        cmd->add_option("--mode", *mode, "'fixed' reuses the d0-optimal weight; 'joint' re-optimizes")
            ->check(CLI::IsMember({"fixed", "joint"}))
            ->capture_default_str();
        cmd->add_option("--p1-db", *p1_db, "probe SNR in dB (fixed mode)")->capture_default_str();
        cmd->add_option("--p2-db", *p2_db, "echo SNR in dB")->capture_default_str();
        cmd->add_option("--d0", cfg->d0, "reference distance the weight is tuned at")
            ->capture_default_str();
        cmd->add_option("--alpha", cfg->path_loss_exponent, "path-loss exponent")
            ->capture_default_str();
        cmd->add_option("--eta", cfg->eta, "wiretapper efficiency")->capture_default_str();
        cmd->add_option("--n", cfg->n_points, "distance grid points")->capture_default_str();
        cmd->add_option("--p1-lo-db", cfg->p1_window.lo_db, "joint-mode p1 window lower bound")
            ->capture_default_str();
        cmd->add_option("--p1-hi-db", cfg->p1_window.hi_db, "joint-mode p1 window upper bound")
            ->capture_default_str();
        add_output_flags(cmd, *out, true);
        cmd->callback([=, &action] {
            action = [=] {
                cfg->mode = (*mode == "fixed") ? steep::SweepMode::kFixedFromReference
                                               : steep::SweepMode::kJointOptimal;
                cfg->p1 = steep::db_to_linear(*p1_db);
                cfg->p2 = steep::db_to_linear(*p2_db);
                const auto sweep = steep::sweep_distance(*cfg);
                write_output(*out, out->as_json ? steep::to_json(sweep).dump(2) + "\n"
                                                : steep::to_csv(sweep));
                return kExitOk;
            };
        });
    }

    // -------------------------------------------------------------- feasible
    {
        auto* cmd = app.add_subcommand("feasible",
                                       "map where a positive secrecy rate is attainable");
        auto plane = std::make_shared<std::string>("snr");
        auto alpha1 = std::make_shared<double>(4.0);
        auto alpha2 = std::make_shared<double>(4.0);
        auto p1_db = std::make_shared<double>(5.0);
        auto p2_db = std::make_shared<double>(20.0);
        auto spec = std::make_shared<steep::FeasibleGridSpec>();
        auto bounds = std::make_shared<std::vector<double>>();
        auto out = std::make_shared<OutputOpts>();
        cmd->add_option("--plane", *plane,
                        "'snr': (p1,p2) axes with advantages fixed; 'advantage': (alpha1,alpha2) "
                        "axes with SNRs fixed")
            ->check(CLI::IsMember({"snr", "advantage"}))
            ->capture_default_str();
        cmd->add_option("--alpha1", *alpha1, "fixed alpha1 (snr plane)")->capture_default_str();
        cmd->add_option("--alpha2", *alpha2, "fixed alpha2 (snr plane)")->capture_default_str();
        cmd->add_option("--p1-db", *p1_db, "fixed p1 in dB (advantage plane)")
            ->capture_default_str();
        cmd->add_option("--p2-db", *p2_db, "fixed p2 in dB (advantage plane)")
            ->capture_default_str();
        cmd->add_option("--bounds", *bounds,
                        "axis bounds lo1 hi1 lo2 hi2; dB for the snr plane, linear for the "
                        "advantage plane (defaults: -10 40 -10 40 dB / 0.1 100 0.1 100)")
            ->expected(4);
        cmd->add_option("--n1", spec->axis1_n, "axis-1 grid points")->capture_default_str();
        cmd->add_option("--n2", spec->axis2_n, "axis-2 grid points")->capture_default_str();
        add_output_flags(cmd, *out, true);
        cmd->callback([=, &action] {
            action = [=] {
                const bool snr_plane = (*plane == "snr");
                double lo1, hi1, lo2, hi2;
                if (!bounds->empty()) {
                    lo1 = (*bounds)[0];
                    hi1 = (*bounds)[1];
                    lo2 = (*bounds)[2];
                    hi2 = (*bounds)[3];
                } else if (snr_plane) {
                    lo1 = lo2 = -10.0;
                    hi1 = hi2 = 40.0;
                } else {
                    lo1 = lo2 = 0.1;
                    hi1 = hi2 = 100.0;
                }
                if (snr_plane) {
                    spec->axis1_lo = steep::db_to_linear(lo1);
                    spec->axis1_hi = steep::db_to_linear(hi1);
                    spec->axis2_lo = steep::db_to_linear(lo2);
                    spec->axis2_hi = steep::db_to_linear(hi2);
                } else {
                    spec->axis1_lo = lo1;
                    spec->axis1_hi = hi1;
                    spec->axis2_lo = lo2;
                    spec->axis2_hi = hi2;
                }
                const auto grid =
                    snr_plane
                        ? steep::feasible_region_snr(*alpha1, *alpha2, *spec)
                        : steep::feasible_region_advantage(steep::db_to_linear(*p1_db),
                                                           steep::db_to_linear(*p2_db), *spec);
                write_output(*out, out->as_json ? steep::to_json(grid).dump(2) + "\n"
                                                : steep::to_csv(grid));
                return kExitOk;
            };
        });
    }

    // ---------------------------------------------------------------- codes
    {
        auto* cmd = app.add_subcommand(
            "codes", "rank code-rate / constellation pairs fitting the capacity gap");
        auto cap_user = std::make_shared<double>(-1.0);
        auto cap_eve = std::make_shared<double>(-1.0);
        auto rates_csv = std::make_shared<std::string>();
        auto m_max = std::make_shared<std::uint64_t>(1024);
        auto out = std::make_shared<OutputOpts>();
        cmd->add_option("--cu", *cap_user, "legitimate effective capacity, bits/sample")
            ->required();
        cmd->add_option("--ce", *cap_eve, "eavesdropper effective capacity, bits/sample")
            ->required();
        cmd->add_option("--rates", *rates_csv,
                        "comma-separated rate list (default: the published LDPC rates)");
        cmd->add_option("--m-max", *m_max, "largest constellation size")->capture_default_str();
        add_output_flags(cmd, *out, true);
        cmd->callback([=, &action] {
            action = [=] {
                const auto rates = rates_csv->empty() ? steep::default_code_rates()
                                                      : parse_rate_list(*rates_csv);
                const auto pairs = steep::select_pairs(*cap_user, *cap_eve, rates, *m_max);
                if (out->as_json)
                    write_output(*out, steep::to_json(pairs, *cap_user, *cap_eve).dump(2) + "\n");
                else if (out->as_csv)
                    write_output(*out, steep::to_csv(pairs, *cap_user, *cap_eve));
                else if (pairs.empty())
                    write_output(*out, "no pair in the rate list fits the capacity gap\n");
                else
                    write_output(*out, steep::to_table(pairs, *cap_user, *cap_eve));
                return kExitOk;
            };
        });
    }

    // ------------------------------------------------------------- simulate
    {
        auto* cmd = app.add_subcommand(
            "simulate", "Monte Carlo session transcript and empirical-versus-analytic MSEs");
        auto p1_db = std::make_shared<double>(5.0);
        auto p2_db = std::make_shared<double>(20.0);
        auto c1_sq = std::make_shared<std::optional<double>>();
        auto K = std::make_shared<std::uint64_t>(100000);
        auto seed = std::make_shared<SeedOpt>();
        auto dump_path = std::make_shared<std::string>();
        auto geom = std::make_shared<GeometryOpts>();
        auto out = std::make_shared<OutputOpts>();
        cmd->add_option("--p1-db", *p1_db, "phase-1 probe SNR in dB")->required();
        cmd->add_option("--p2-db", *p2_db, "phase-2 echo SNR in dB")->required();
        cmd->add_option("--c1-sq", *c1_sq, "squared probe weight; omitted = optimized");
        cmd->add_option("--K", *K, "round trips to simulate")->capture_default_str();
        cmd->add_option("--seed", seed->text, "hex seed; omitted = drawn and echoed");
        cmd->add_option("--dump-transcript", *dump_path,
                        "also write the full per-sample transcript CSV to this path");
        geom->add_flags(cmd);
        add_output_flags(cmd, *out, false);
        cmd->callback([=, &action] {
            action = [=] {
                const double p1 = steep::db_to_linear(*p1_db);
                const double p2 = steep::db_to_linear(*p2_db);
                const auto [a1, a2] = geom->resolve();
                const double c1 = c1_sq->has_value()
                                      ? **c1_sq
                                      : steep::optimize_c1(p1, p2, a1, a2).c1_sq_star;
                const steep::SystemParams p{p1, p2, a1, a2, c1};
                p.validate();
                const std::uint64_t s = seed->resolve();
                const auto t = steep::simulate(p, *K, s);
                if (!dump_path->empty()) {
                    std::ofstream f(*dump_path, std::ios::binary);
                    if (!f)
                        throw std::invalid_argument("cannot open transcript path '" + *dump_path +
                                                    "'");
                    f << steep::to_csv(t);
                }
                // Below 1000 samples the estimators refuse to run; the dump is
                // still useful, so report the analytics alone.
                const bool enough = *K >= 1000;
                const steep::MseEstimate mu =
                    enough ? steep::empirical_mse_user(t)
                           : steep::MseEstimate{std::nan(""), std::nan("")};
                const steep::MseEstimate me =
                    enough ? steep::empirical_mse_eve(t)
                           : steep::MseEstimate{std::nan(""), std::nan("")};
                const double au = steep::mse_user(p), ae = steep::mse_eve(p);
                if (out->as_json) {
                    json j{{"params", steep::to_json(p)},
                           {"K", *K},
                           {"seed", steep::fmt_seed(s)},
                           {"mse_user", {{"analytic", au}, {"empirical", mu.mse},
                                         {"std_err", mu.std_err}}},
                           {"mse_eve", {{"analytic", ae}, {"empirical", me.mse},
                                        {"std_err", me.std_err}}}};
                    write_output(*out, j.dump(2) + "\n");
                } else {
                    char buf[512];
                    if (enough)
                        std::snprintf(buf, sizeof buf,
                                      "K = %llu  seed = %s\n"
                                      "MSE_U: analytic %.6f  empirical %.6f (std err %.2e)\n"
                                      "MSE_E: analytic %.6f  empirical %.6f (std err %.2e)\n",
                                      static_cast<unsigned long long>(*K),
                                      steep::fmt_seed(s).c_str(), au, mu.mse, mu.std_err, ae,
                                      me.mse, me.std_err);
                    else
                        std::snprintf(buf, sizeof buf,
                                      "K = %llu  seed = %s\n"
                                      "MSE_U: analytic %.6f  MSE_E: analytic %.6f\n"
                                      "empirical estimates need K >= 1000; skipped\n",
                                      static_cast<unsigned long long>(*K),
                                      steep::fmt_seed(s).c_str(), au, ae);
                    write_output(*out, buf);
                }
                return kExitOk;
            };
        });
    }

    // --------------------------------------------------------------- keygen
    {
        auto* cmd = app.add_subcommand(
            "keygen", "two opposite sessions, capacity gating and privacy amplification");
        auto sc = std::make_shared<steep::KeygenScenario>();
        auto p1_db = std::make_shared<double>(5.0);
        auto p2_db = std::make_shared<double>(20.0);
        auto rate_str = std::make_shared<std::string>();
        auto m_val = std::make_shared<std::uint64_t>(0);
        auto noise_seed = std::make_shared<SeedOpt>();
        auto payload_seed = std::make_shared<SeedOpt>();
        auto hash_seed = std::make_shared<SeedOpt>();
        auto out = std::make_shared<OutputOpts>();
        cmd->add_option("--p1-db", *p1_db, "phase-1 probe SNR in dB")->capture_default_str();
        cmd->add_option("--p2-db", *p2_db, "phase-2 echo SNR in dB")->capture_default_str();
        cmd->add_option("--d", sc->geometry.d, "actual fractional Eve distance")
            ->capture_default_str();
        cmd->add_option("--d0", sc->d0, "reference distance the weight is tuned at")
            ->capture_default_str();
        cmd->add_option("--alpha", sc->geometry.path_loss_exponent, "path-loss exponent")
            ->capture_default_str();
        cmd->add_option("--eta", sc->geometry.eta, "wiretapper efficiency")
            ->capture_default_str();
        cmd->add_option("--K", sc->K, "probes per session")->capture_default_str();
        cmd->add_option("--code-rate", *rate_str, "code rate as n/d; omitted = auto-selected");
        cmd->add_option("--m", *m_val, "constellation size, power of 2; omitted = auto-selected");
        cmd->add_option("--seed", noise_seed->text, "hex seed for the channel noise");
        cmd->add_option("--payload-seed", payload_seed->text, "hex seed for the payload bits");
        cmd->add_option("--hash-seed", hash_seed->text, "hex seed fixing the Toeplitz instance");
        add_output_flags(cmd, *out, false);
        cmd->callback([=, &action] {
            action = [=] {
                sc->p1 = steep::db_to_linear(*p1_db);
                sc->p2 = steep::db_to_linear(*p2_db);
                sc->noise_seed = noise_seed->resolve();
                sc->payload_seed = payload_seed->resolve();
                sc->hash_seed = hash_seed->resolve();
                if (rate_str->empty() != (*m_val == 0))
                    throw std::invalid_argument("--code-rate and --m must be given together");
                if (!rate_str->empty()) {
                    const auto rate = steep::Rational::parse(*rate_str);
                    if (*m_val < 2 || (*m_val & (*m_val - 1)) != 0)
                        throw std::invalid_argument("--m must be a power of 2, at least 2");
                    int bits = 0;
                    while ((std::uint64_t{1} << (bits + 1)) <= *m_val) ++bits;
                    sc->pair = steep::CodePair{rate, *m_val, bits, 0.0, 0.0};
                } else {
                    // Auto-select the top-ranked pair from the reference-distance capacities.
                    steep::GeometryParams ref{sc->d0, sc->geometry.path_loss_exponent,
                                              sc->geometry.eta};
                    const auto [a1, a2] = steep::eve_advantages(ref);
                    const auto opt = steep::optimize_c1(sc->p1, sc->p2, a1, a2);
                    const auto pairs =
                        steep::select_pairs(opt.report.cap_user, opt.report.cap_eve);
                    if (pairs.empty())
                        throw std::domain_error(
                            "no code pair fits the capacity gap at the reference distance");
                    sc->pair = pairs.front();
                }
                const auto res = steep::end_to_end_keygen(*sc);
                if (out->as_json) {
                    write_output(*out, steep::to_json(res, *sc).dump(2) + "\n");
                } else {
                    char buf[768];
                    std::snprintf(
                        buf, sizeof buf,
                        "code pair: rate %s, M = %llu\n"
                        "c1_sq = %.6f  rbar(worst case) = %.6f\n"
                        "payload bits per session = %llu\n"
                        "forward  session: C_U %.4f C_E %.4f  user gate %s  eve gate %s\n"
                        "reverse  session: C_U %.4f C_E %.4f  user gate %s  eve gate %s\n"
                        "seeds: noise %s  payload %s  hash %s\n",
                        sc->pair.rate.str().c_str(), static_cast<unsigned long long>(sc->pair.m),
                        res.report.c1_sq, res.report.rbar,
                        static_cast<unsigned long long>(res.report.payload_bits),
                        res.report.forward.cap_user, res.report.forward.cap_eve,
                        res.report.forward.user_gate ? "pass" : "FAIL",
                        res.report.forward.eve_gate ? "PASS (leaky)" : "fail",
                        res.report.reverse.cap_user, res.report.reverse.cap_eve,
                        res.report.reverse.user_gate ? "pass" : "FAIL",
                        res.report.reverse.eve_gate ? "PASS (leaky)" : "fail",
                        steep::fmt_seed(sc->noise_seed).c_str(),
                        steep::fmt_seed(sc->payload_seed).c_str(),
                        steep::fmt_seed(sc->hash_seed).c_str());
                    std::string text = buf;
                    if (res.report.success) {
                        text += "key bits = " + std::to_string(res.report.key_bits) + "\n";
                        text += "key = " + res.key.bits.to_hex() + "\n";
                    } else {
                        text += "no key: " + res.report.failure + "\n";
                    }
                    write_output(*out, text);
                }
                return res.report.success ? kExitOk : kExitDomain;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
