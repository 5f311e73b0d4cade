#include <catch2/catch.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "steep/emit.hpp"

using namespace steep;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("csv schemas are pinned") {
    CHECK(std::string(kSweepCsvHeader) == "d,rs_hat_plus,rs_bar,c1_sq_star,p1_star_db,rs_star");
    CHECK(std::string(kSurfaceCsvHeader) == "p1_db,c1_sq,rs");
    CHECK(std::string(kCodesCsvHeader) ==
          "rank,rate,m,bits_per_symbol,ce_over_r,cu_over_r,lower_margin,upper_margin");
}

TEST_CASE("distance sweep serialization") {
    DistanceSweepConfig cfg;
    cfg.n_points = 5;
    const DistanceSweep sweep = sweep_distance(cfg);
    const auto lines = lines_of(to_csv(sweep));
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == kSweepCsvHeader);

    const auto j = to_json(sweep);
    CHECK(j["mode"] == "fixed");
    REQUIRE(j["records"].size() == 5);
    CHECK(j["records"][0]["d"].get<double>() == sweep.records[0].d);
    CHECK(j["records"][4]["rs_bar"].get<double>() == sweep.records[4].rs_bar);
}

TEST_CASE("feasible region serialization carries both axes as header rows") {
    FeasibleGridSpec spec{1.0, 10.0, 3, 2.0, 20.0, 4};
    const FeasibleRegionGrid g = feasible_region_snr(4.0, 4.0, spec);
    const auto lines = lines_of(to_csv(g));
    REQUIRE(lines.size() == 4 + 3);
    CHECK(lines[0] == "axis1,p1");
    CHECK(lines[2] == "axis2,p2");
    CHECK(lines[1].substr(0, 2) == "1,");
    for (int i = 4; i < 7; ++i) {
        std::size_t commas = 0;
        for (char c : lines[i])
            if (c == ',') ++commas;
        CHECK(commas == 3);  // four 0/1 cells per matrix row
    }

    const auto j = to_json(g);
    CHECK(j["axis1"]["name"] == "p1");
    CHECK(j["axis2"]["values"].size() == 4);
    CHECK(j["feasible"].size() == 3);
}

TEST_CASE("report json round-trips") {
    const SystemParams p{db_to_linear(5.0), db_to_linear(20.0), 4.0, 4.0, 0.3776};
    const SecrecyReport r = secrecy_report(p);
    const std::string dumped = to_json(r).dump();
    const auto parsed = nlohmann::json::parse(dumped);
    CHECK(parsed["mse_user"].get<double>() == r.mse_user);
    CHECK(parsed["mse_eve"].get<double>() == r.mse_eve);
    CHECK(parsed["cap_user"].get<double>() == r.cap_user);
    CHECK(parsed["rs"].get<double>() == r.rs);

    const auto pj = to_json(p);
    CHECK(pj["alpha1"].get<double>() == 4.0);
    CHECK(pj["c2_sq"].get<double>() == c2_sq(p));
}

TEST_CASE("transcript dump format") {
    const SystemParams p{db_to_linear(5.0), db_to_linear(20.0), 4.0, 4.0, 0.3776};
    const SessionTranscript t = simulate(p, 3, 0x1);
    const auto lines = lines_of(to_csv(t));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0].substr(0, 5) == "# p1=");
    CHECK(lines[0].find("seed=0x0000000000000001") != std::string::npos);
    CHECK(lines[1] ==
          "k,x1_re,x1_im,w1_re,w1_im,y1_re,y1_im,s2_re,s2_im,x2_re,x2_im,w2_re,w2_im,"
          "y2_re,y2_im,v1_re,v1_im,z1_re,z1_im,v2_re,v2_im,z2_re,z2_im");
    std::size_t commas = 0;
    for (char c : lines[2])
        if (c == ',') ++commas;
    CHECK(commas == 22);
    CHECK(lines[2].substr(0, 2) == "0,");
}

TEST_CASE("code table serialization") {
    const auto pairs = select_pairs(2.289, 2.125);
    const auto lines = lines_of(to_csv(pairs, 2.289, 2.125));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == kCodesCsvHeader);
    CHECK(lines[1].substr(0, 8) == "1,1/4,51");

    const auto j = to_json(pairs, 2.289, 2.125);
    CHECK(j["pairs"].size() == 2);
    CHECK(j["pairs"][0]["m"] == 512);
    CHECK(j["pairs"][0]["ce_over_r"].get<double>() == Approx(8.5));

    const std::string table = to_table(pairs, 2.289, 2.125);
    CHECK(table.find("1/4") != std::string::npos);
    CHECK(table.find("512") != std::string::npos);
}

TEST_CASE("seed formatting") {
    CHECK(fmt_seed(1) == "0x0000000000000001");
    CHECK(fmt_seed(0xdeadbeef12345678ull) == "0xdeadbeef12345678");
}
