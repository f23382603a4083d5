#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "app.hpp"

using json = nlohmann::json;
using fermiwell::app::run;

namespace {

struct Result
{
    int code = 0;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json call_json(const std::vector<std::string>& args)
{
    const Result r = call(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::vector<std::vector<double>> parse_tsv(const std::string& text)
{
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream cols(line);
        std::vector<double> row;
        double v = 0;
        while (cols >> v)
            row.push_back(v);
        rows.push_back(row);
    }
    return rows;
}

const std::vector<std::string> kShowcase = {"--v0", "45.3642", "--a", "2", "--b", "1"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail)
{
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

} // namespace

TEST_CASE("info")
{
    const json j = call_json(with({"info"}, kShowcase));
    CHECK(j["schema_version"] == "1");
    CHECK(j["command"] == "info");
    CHECK(j["results"]["alpha"].get<double>() == 2.0);
    CHECK(j["results"]["beta"].get<double>() == doctest::Approx(1.5723).epsilon(1e-4));
    CHECK(j["results"]["g"].get<double>() == doctest::Approx(3.4541).epsilon(1e-4));
    CHECK(j["results"]["count_bracket"] == json::array({3, 4}));
    CHECK(j["units"]["v0"] == "MeV");

    const json row1 = call_json({"info", "--v0", "48.6845", "--a", "1.5", "--b", "0.9"});
    CHECK(row1["results"]["g"].get<double>() == doctest::Approx(3.0).epsilon(1e-3));
}

TEST_CASE("spectrum methods")
{
    const json exact = call_json(with({"spectrum"}, kShowcase));
    const auto& levels = exact["results"]["levels"];
    REQUIRE(levels.size() == 3);
    const double want[] = {-33.7554, -16.2221, -4.6764};
    for (int i = 0; i < 3; ++i)
    {
        CHECK(std::abs(levels[i]["energy"].get<double>() - want[i]) <= 1e-3);
        CHECK(levels[i]["nodes"] == i);
    }
    CHECK(levels[1]["parity"] == "odd");
    CHECK(exact["results"]["count"] == 3);

    const json wkb = call_json(with({"spectrum", "--method", "wkb"}, kShowcase));
    const double want_wkb[] = {-32.9723, -15.8589, -4.2151};
    REQUIRE(wkb["results"]["levels"].size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(wkb["results"]["levels"][i]["energy"].get<double>() - want_wkb[i]) <= 1e-2);

    const json oracle = call_json(with({"spectrum", "--method", "oracle"}, kShowcase));
    REQUIRE(oracle["results"]["levels"].size() == 3);
    CHECK(oracle["results"]["zero_energy_count"] == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(oracle["results"]["levels"][i]["energy"].get<double>() - want[i]) <= 1e-3);
}

TEST_CASE("spectrum as csv")
{
    const Result r = call(with({"spectrum", "--format", "csv"}, kShowcase));
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "index,energy_MeV,parity,nodes");
    std::getline(in, line);
    CHECK(line == "0,-33.7554,even,0");
}

TEST_CASE("hbs")
{
    const json j = call_json({"hbs", "--alpha", "2", "--n", "3"});
    CHECK(std::abs(j["results"]["beta_n"].get<double>() - 1.5723) <= 5e-4);
    CHECK(j["results"]["criticality"]["count_below"] == 3);
    CHECK(j["results"]["criticality"]["count_above"] == 4);
    CHECK(j["results"]["criticality"]["ok"] == true);

    const Result scan = call({"hbs-scan", "--alpha", "4", "--n", "4", "--format", "csv"});
    CHECK(scan.code == 0);
    CHECK(scan.out.rfind("alpha,n,beta_n,g\n", 0) == 0);
    CHECK(scan.out.find("4.0000,4,1.2913,4.435") != std::string::npos);
}

TEST_CASE("nuclear")
{
    const json o = call_json({"nuclear", "--mass", "16"});
    CHECK(std::abs(o["results"]["g"].get<double>() - 4.13) <= 0.02);
    CHECK(o["results"]["s_wave_count"] == 2);
    CHECK(o["results"]["within_bracket"] == true);

    const json pb = call_json({"nuclear", "-A", "208"});
    CHECK(std::abs(pb["results"]["g"].get<double>() - 8.49) <= 0.02);
    CHECK(pb["results"]["s_wave_count"] == 4);
}

TEST_CASE("plot data")
{
    const auto pot = parse_tsv(call({"plot-data", "--kind", "potential"}).out);
    REQUIRE(pot.size() == 401);
    CHECK(pot.front().size() == 4);
    CHECK(pot[200][0] == 0.0);
    CHECK(pot[200][1] == doctest::Approx(-5.0).epsilon(1e-4));

    const auto hbs = parse_tsv(call({"plot-data", "--kind", "hbs", "--alpha", "4", "--beta", "0.9947",
                                     "--points", "2001", "--precision", "17"}).out);
    REQUIRE(hbs.size() == 2001);
    int changes = 0;
    for (std::size_t i = 1; i < hbs.size(); ++i)
        changes += (hbs[i][1] < 0) != (hbs[i - 1][1] < 0) && hbs[i][1] != 0 ? 1 : 0;
    CHECK(changes == 3);
    CHECK(hbs.back()[1] == doctest::Approx(1.0).epsilon(1e-3));

    const auto eig = parse_tsv(call(with({"plot-data", "--kind", "eigenfunctions", "--points", "4001",
                                          "--xmin", "-20", "--xmax", "20", "--precision", "17"},
                                         kShowcase)).out);
    REQUIRE(eig.size() == 4001);
    REQUIRE(eig.front().size() == 4);
    for (std::size_t col = 1; col < 4; ++col)
    {
        double norm = 0;
        for (std::size_t i = 1; i < eig.size(); ++i)
            norm += 0.5 * (eig[i][col] * eig[i][col] + eig[i - 1][col] * eig[i - 1][col]) * 0.01;
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-4));
    }
}

TEST_CASE("reproduce")
{
    for (const char* table : {"1", "3"})
    {
        const json j = call_json({"reproduce", "--table", table});
        CHECK(j["results"]["all_pass"] == true);
    }
    const json t3 = call_json({"reproduce", "--table", "3"});
    REQUIRE(t3["results"]["rows"].size() == 3);
    CHECK(t3["results"]["rows"][2]["s_wave_count"]["computed"] == 4);
}

TEST_CASE("exit codes")
{
    CHECK(call({}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"info", "--v0", "45"}).code == 2);
    CHECK(call({"info", "--v0", "-4", "--a", "2", "--b", "1"}).code == 2);
    CHECK(call(with({"spectrum", "--method", "newton"}, kShowcase)).code == 2);
    CHECK(call(with({"info", "--format", "csv"}, kShowcase)).code == 2);
    CHECK(call({"reproduce", "--table", "7"}).code == 2);
    CHECK(call({"plot-data", "--kind", "eigenfunctions"}).code == 2);
    const Result bad = call({"nuclear", "--mass", "0"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("mass number") != std::string::npos);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("determinism and precision")
{
    const Result first = call(with({"spectrum", "--precision", "17"}, kShowcase));
    const Result second = call(with({"spectrum", "--precision", "17"}, kShowcase));
    CHECK(first.out == second.out);

    const json full = json::parse(first.out);
    const double e0 = full["results"]["levels"][0]["energy"].get<double>();
    CHECK(e0 != std::round(e0 * 1e4) / 1e4);

    const json rounded = call_json(with({"spectrum", "--precision", "2"}, kShowcase));
    CHECK(rounded["results"]["levels"][0]["energy"].get<double>() == -33.76);

    // json round trip
    CHECK(json::parse(full.dump()) == full);
}

TEST_CASE("output file")
{
    const auto path = std::filesystem::temp_directory_path() / "fermiwell_cli_test.json";
    std::filesystem::remove(path);
    const Result r = call(with({"info", "--out", path.string()}, kShowcase));
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const json j = json::parse(in);
    CHECK(j["command"] == "info");
    std::filesystem::remove(path);

    CHECK(call(with({"info", "--out", "/nonexistent/dir/x.json"}, kShowcase)).code == 2);
}
