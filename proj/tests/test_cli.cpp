#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "steep/secrecy.hpp"
#include "steep/units.hpp"

#ifndef STEEP_CLI_PATH
#error "STEEP_CLI_PATH must point at the built executable"
#endif

namespace {

struct CmdResult {
    int exit_code;
    std::string output;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

CmdResult run_cli(const std::string& args) {
    const std::string out_path = "cli_test_output.tmp";
    const std::string cmd = std::string(STEEP_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int raw = std::system(cmd.c_str());
    CmdResult r;
    r.exit_code = WEXITSTATUS(raw);
    r.output = slurp(out_path);
    std::remove(out_path.c_str());
    return r;
}

const std::string kRefArgs = "--p1-db 5 --p2-db 20 --c1-sq 0.3776";

}  // namespace

TEST_CASE("cli: rate at the reference point") {
    const CmdResult r = run_cli("rate " + kRefArgs + " --json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["report"]["cap_user"].get<double>() == Approx(2.289).margin(1e-3));
    CHECK(j["report"]["cap_eve"].get<double>() == Approx(2.125).margin(1e-3));
    CHECK(j["c1_optimized"] == false);

    SECTION("json output round-trips the library values exactly") {
        const steep::SystemParams p{steep::db_to_linear(5.0), steep::db_to_linear(20.0), 4.0, 4.0,
                                    0.3776};
        const steep::SecrecyReport expect = steep::secrecy_report(p);
        CHECK(j["report"]["mse_user"].get<double>() == expect.mse_user);
        CHECK(j["report"]["mse_eve"].get<double>() == expect.mse_eve);
        CHECK(j["report"]["rs"].get<double>() == expect.rs);
        CHECK(j["params"]["c2_sq"].get<double>() == steep::c2_sq(p));
    }
    SECTION("text output mentions the rate") {
        const CmdResult t = run_cli("rate " + kRefArgs);
        REQUIRE(t.exit_code == 0);
        CHECK(t.output.find("R_s") != std::string::npos);
        CHECK(t.output.find("0.1636") != std::string::npos);
    }
    SECTION("omitted weight is optimized and flagged") {
        const CmdResult t = run_cli("rate --p1-db 5 --p2-db 20 --json");
        REQUIRE(t.exit_code == 0);
        const auto jt = nlohmann::json::parse(t.output);
        CHECK(jt["c1_optimized"] == true);
        CHECK(jt["params"]["c1_sq"].get<double>() == Approx(0.37702).margin(1e-4));
    }
}

TEST_CASE("cli: negative rate is a reported result, not an error") {
    const CmdResult r = run_cli("rate --p1-db 5 --p2-db -20 --c1-sq 0.1 --json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["report"]["rs"].get<double>() < 0.0);
    CHECK(j["report"]["rs_plus"].get<double>() == 0.0);
}

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run_cli("rate --p2-db 20").exit_code == 2);          // missing required flag
    CHECK(run_cli("nonsense").exit_code == 2);                 // unknown subcommand
    CHECK(run_cli("").exit_code == 2);                         // subcommand required
    CHECK(run_cli("simulate --p1-db 5 --p2-db 20 --seed zz").exit_code == 2);
    CHECK(run_cli("rate --p1-db -5 --p2-db 20 --c1-sq 0.9").exit_code == 2);  // c1_sq too large
}

TEST_CASE("cli: domain errors exit with 3") {
    CHECK(run_cli("codes --cu 2.0 --ce 2.0").exit_code == 3);
    CHECK(run_cli("codes --cu 1.9 --ce 2.0").exit_code == 3);
}

TEST_CASE("cli: codes table") {
    const CmdResult r = run_cli("codes --cu 2.289 --ce 2.125");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("1/4") != std::string::npos);
    CHECK(r.output.find("512") != std::string::npos);
    CHECK(r.output.find("3/4") != std::string::npos);

    const CmdResult c = run_cli("codes --cu 2.289 --ce 2.125 --csv");
    CHECK(c.output.rfind("rank,rate,m,bits_per_symbol", 0) == 0);

    const CmdResult j = run_cli("codes --cu 2.289 --ce 2.125 --json");
    const auto parsed = nlohmann::json::parse(j.output);
    REQUIRE(parsed["pairs"].size() == 2);
    CHECK(parsed["pairs"][0]["rate"] == "1/4");
    CHECK(parsed["pairs"][0]["m"] == 512);
}

TEST_CASE("cli: simulate is reproducible from the echoed seed") {
    const std::string args = "simulate --p1-db 5 --p2-db 20 --c1-sq 0.3776 --K 20000";
    const CmdResult first = run_cli(args + " --json");
    REQUIRE(first.exit_code == 0);
    const auto j1 = nlohmann::json::parse(first.output);
    const std::string seed = j1["seed"].get<std::string>();

    const CmdResult second = run_cli(args + " --json --seed " + seed);
    const auto j2 = nlohmann::json::parse(second.output);
    CHECK(j1["mse_user"]["empirical"].get<double>() == j2["mse_user"]["empirical"].get<double>());
    CHECK(j1["mse_eve"]["empirical"].get<double>() == j2["mse_eve"]["empirical"].get<double>());

    SECTION("identical transcript dumps for a fixed seed") {
        const std::string base =
            "simulate --p1-db 5 --p2-db 20 --c1-sq 0.3776 --K 500 --seed 2a --dump-transcript ";
        REQUIRE(run_cli(base + "cli_dump_a.tmp").exit_code == 0);
        REQUIRE(run_cli(base + "cli_dump_b.tmp").exit_code == 0);
        const std::string a = slurp("cli_dump_a.tmp"), b = slurp("cli_dump_b.tmp");
        std::remove("cli_dump_a.tmp");
        std::remove("cli_dump_b.tmp");
        REQUIRE(!a.empty());
        CHECK(a == b);
        CHECK(a.find("seed=0x000000000000002a") != std::string::npos);
    }
}

TEST_CASE("cli: surface single point equals rate") {
    const CmdResult s = run_cli(
        "sweep-surface --p2-db 20 --p1-lo-db 5 --p1-hi-db 5 --n-p1 1 --n-c1 1 --json");
    REQUIRE(s.exit_code == 0);
    const auto js = nlohmann::json::parse(s.output);
    REQUIRE(js.size() == 1);
    const double c1 = js[0]["c1_sq"].get<double>();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", c1);
    const CmdResult r = run_cli("rate --p1-db 5 --p2-db 20 --c1-sq " + std::string(buf) + " --json");
    const auto jr = nlohmann::json::parse(r.output);
    CHECK(js[0]["rs"].get<double>() == Approx(jr["report"]["rs"].get<double>()).epsilon(1e-12));
}

TEST_CASE("cli: sweep-distance emits the pinned schema and symmetric averages") {
    const CmdResult r = run_cli("sweep-distance");
    REQUIRE(r.exit_code == 0);
    std::stringstream ss(r.output);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "d,rs_hat_plus,rs_bar,c1_sq_star,p1_star_db,rs_star");
    std::vector<std::string> d_col, rs_bar;
    while (std::getline(ss, line)) {
        std::stringstream row(line);
        std::string cell;
        for (int c = 0; c <= 2 && std::getline(row, cell, ','); ++c) {
            if (c == 0) d_col.push_back(cell);
            if (c == 2) rs_bar.push_back(cell);
        }
    }
    REQUIRE(rs_bar.size() == 99);
    for (std::size_t i = 0; i < rs_bar.size(); ++i) CHECK(rs_bar[i] == rs_bar[98 - i]);
    CHECK(d_col[49] == "0.5");
    CHECK(std::stod(rs_bar[49]) == Approx(0.164).margin(1e-3));
}

TEST_CASE("cli: feasible single cell") {
    const CmdResult r =
        run_cli("feasible --plane advantage --p1-db 5 --p2-db 20 --bounds 4 4 4 4 --n1 1 --n2 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("axis1,alpha1") != std::string::npos);
    CHECK(r.output.back() == '\n');
    CHECK(r.output.substr(r.output.size() - 2) == "1\n");  // the single matrix cell is feasible
}

TEST_CASE("cli: keygen at the reference scenario") {
    const CmdResult r = run_cli(
        "keygen --K 2000 --seed 1 --payload-seed 2 --hash-seed 3 --code-rate 1/4 --m 512 --json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["success"] == true);
    CHECK(j["forward_session"]["user_gate"] == true);
    CHECK(j["reverse_session"]["user_gate"] == true);
    CHECK(j["forward_session"]["eve_gate"] == false);
    CHECK(j["reverse_session"]["eve_gate"] == false);
    const auto key_bits = j["key_bits"].get<std::uint64_t>();
    CHECK(key_bits == 654);  // floor(2 * 2000 * 0.16364)
    CHECK(j["key_hex"].get<std::string>().size() == 2 * ((key_bits + 7) / 8));

    SECTION("deterministic given the same seeds") {
        const CmdResult again = run_cli(
            "keygen --K 2000 --seed 1 --payload-seed 2 --hash-seed 3 --code-rate 1/4 --m 512 "
            "--json");
        const auto j2 = nlohmann::json::parse(again.output);
        CHECK(j2["key_hex"] == j["key_hex"]);
    }
    SECTION("auto-selected pair matches the ranked table") {
        const CmdResult a = run_cli("keygen --K 2000 --seed 1 --payload-seed 2 --hash-seed 3 --json");
        const auto ja = nlohmann::json::parse(a.output);
        CHECK(ja["scenario"]["code_rate"] == "1/4");
        CHECK(ja["scenario"]["m"] == 512);
    }
}

TEST_CASE("cli: output file writing") {
    const CmdResult r = run_cli("rate " + kRefArgs + " --json --out cli_out.tmp");
    REQUIRE(r.exit_code == 0);
    const std::string content = slurp("cli_out.tmp");
    std::remove("cli_out.tmp");
    CHECK(nlohmann::json::parse(content)["report"]["rs"].get<double>() ==
          Approx(0.1636).margin(1e-3));
}
