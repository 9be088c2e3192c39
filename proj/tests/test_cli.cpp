#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "trigdunkl/kernel.hpp"

using trigdunkl::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return Run{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli kernel") {
    const Run direct = run({"kernel", "--k1", "0.5", "--k2", "0.5", "--x", "1", "--y", "0.3", "--method", "direct"});
    REQUIRE(direct.code == 0);
    const auto j = nlohmann::ordered_json::parse(direct.out);
    CHECK(j["value"].get<double>() > 0.0);
    CHECK(j["method"] == "direct");
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"k1", "k2", "x", "y", "method", "value", "est_error", "quadrature"});

    const Run mourou = run({"kernel", "--k1", "0.5", "--k2", "0.5", "--x", "1", "--y", "0.3", "--method", "mourou"});
    REQUIRE(mourou.code == 0);
    const auto m = nlohmann::json::parse(mourou.out);
    const double tol = j["est_error"].get<double>() + m["est_error"].get<double>() + 1e-15;
    CHECK(std::abs(j["value"].get<double>() - m["value"].get<double>()) <= tol);
}

TEST_CASE("cli kernel complex k prints {re, im}") {
    const Run r = run({"kernel", "--k1", "0.5", "--k1-im", "0.2", "--k2", "0.5", "--x", "1", "--y", "0.3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].contains("re"));
    CHECK(j["value"].contains("im"));
    CHECK(j["k1"]["im"].get<double>() == 0.2);
}

TEST_CASE("cli argument and domain errors exit 2") {
    const Run bad_y = run({"kernel", "--k1", "0.5", "--k2", "0.5", "--x", "1", "--y", "2"});
    CHECK(bad_y.code == 2);
    CHECK(bad_y.err.find("require |y| < |x|") != std::string::npos);
    CHECK(run({"kernel", "--k1", "-0.5", "--k2", "0.5", "--x", "1", "--y", "0"}).code == 2);
    CHECK(run({"kernel", "--k1", "0.5", "--x", "1", "--y", "0"}).code == 2);
    CHECK(run({"kernel", "--k1", "0.5", "--k2", "0.5", "--x", "1", "--y", "0", "--method", "other"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "--suite", "nothing"}).code == 2);
    CHECK(run({"verify", "--suite", "eigen", "--tol", "-1"}).code == 2);
    CHECK(run({"scan", "--k1", "1:0:3"}).code == 2);
    CHECK(run({"scan", "--k1", "0:1:0"}).code == 2);
    CHECK(run({"scan", "--k1", "abc"}).code == 2);
    CHECK(run({"kernel", "--k1", "0.5", "--k2", "0.5", "--x", "1", "--y", "0", "--jacobi-nodes", "0"}).code == 2);
    CHECK(run({"apply-vt", "--k1", "0.5", "--k2", "0.5", "--function", "gaussian", "--y", "0.3"}).code == 2);
    CHECK(run({"apply-v", "--k1", "0.5", "--k2", "0.5", "--function", "cosine", "--x", "0.3"}).code == 2);
}

TEST_CASE("cli help exits 0") {
    CHECK(run({"--help"}).code == 0);
    const Run sub = run({"scan", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--y-fraction") != std::string::npos);
}

TEST_CASE("cli verify") {
    const Run ok = run({"verify", "--suite", "eigen"});
    CHECK(ok.code == 0);
    const auto rows = nlohmann::ordered_json::parse(ok.out);
    REQUIRE(rows.is_array());
    CHECK(rows.size() == 162);
    for (const auto& row : rows) CHECK(row["pass"].get<bool>());
    std::vector<std::string> keys;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"check", "point", "lhs", "rhs", "gap", "tol", "pass"});

    CHECK(run({"verify", "--suite", "positivity"}).code == 0);
    CHECK(run({"verify", "--suite", "eigen", "--tol", "1e-30"}).code == 1);

    const Run csv = run({"verify", "--suite", "limits", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("check,point,lhs_re,lhs_im,rhs_re,rhs_im,gap,tol,pass\n", 0) == 0);
    // points contain commas and are quoted
    CHECK(csv.out.find(",\"k=(") != std::string::npos);
}

TEST_CASE("cli scan") {
    const Run def = run({"scan"});
    CHECK(def.code == 0);
    CHECK(def.out.rfind("k1,k2,x,y,value\n", 0) == 0);
    CHECK(def.out.find("# min_value=") != std::string::npos);
    CHECK(def.out.find("all_positive=true") != std::string::npos);

    const Run cell = run({"scan", "--k1", "0.5", "--k2", "0.5", "--x", "1", "--y-fraction", "0.3"});
    REQUIRE(cell.code == 0);
    std::istringstream lines(cell.out);
    std::string header;
    std::string row;
    std::getline(lines, header);
    std::getline(lines, row);
    const std::string value = row.substr(row.rfind(',') + 1);
    const auto k = nlohmann::json::parse(
        run({"kernel", "--k1", "0.5", "--k2", "0.5", "--x", "1", "--y", "0.3"}).out);
    CHECK(std::stod(value) == k["value"].get<double>());

    const Run range = run({"scan", "--k1", "0.3:1.5:3", "--k2", "0.7", "--x", "1.3", "--y-fraction",
                           "-0.9999,-0.99", "--format", "json"});
    CHECK(range.code == 0);
    const auto arr = nlohmann::json::parse(range.out);
    CHECK(arr.size() == 3 * 2 + 1);
    CHECK(arr.back()["all_positive"].get<bool>());
}

TEST_CASE("cli point commands") {
    const Run v = run({"apply-v", "--k1", "0.5", "--k2", "0.5", "--function", "plane-wave", "--param", "1.5", "--x", "1"});
    REQUIRE(v.code == 0);
    const Run g = run({"opdam", "--k1", "0.5", "--k2", "0.5", "--lambda", "1.5", "--x", "1"});
    REQUIRE(g.code == 0);
    const auto jv = nlohmann::json::parse(v.out);
    const auto jg = nlohmann::json::parse(g.out);
    CHECK(std::abs(jv["value"]["re"].get<double>() - jg["value"]["re"].get<double>()) < 1e-6);
    CHECK(std::abs(jv["value"]["im"].get<double>() - jg["value"]["im"].get<double>()) < 1e-6);

    const Run vt = run({"apply-vt", "--k1", "0.7", "--k2", "0.4", "--function", "bump", "--param", "2", "--y", "2.5"});
    REQUIRE(vt.code == 0);
    CHECK(nlohmann::json::parse(vt.out)["value"]["re"].get<double>() == 0.0);

    const Run csv = run({"opdam", "--k1", "0.5", "--k2", "0.5", "--lambda", "0", "--x", "0", "--format", "csv"});
    CHECK(csv.out == "k1_re,k1_im,k2_re,k2_im,lambda_re,lambda_im,x,value_re,value_im\n0.5,0,0.5,0,0,0,0,1,0\n");
}

TEST_CASE("cli output is deterministic and --out writes the report") {
    const std::vector<std::string> args = {"scan", "--k1", "0.3,0.7", "--k2", "1.5", "--x", "-0.6,2.4"};
    CHECK(run(args).out == run(args).out);

    const std::string path = "trigdunkl_cli_test_out.json";
    std::vector<std::string> with_out = {"kernel", "--k1", "1", "--k2", "1", "--x", "2", "--y", "-1", "--out", path};
    const Run r = run(with_out);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(nlohmann::json::parse(content.str())["value"].get<double>() > 0.0);
    std::remove(path.c_str());

    CHECK(run({"kernel", "--k1", "1", "--k2", "1", "--x", "2", "--y", "-1", "--out", "/nonexistent/dir/x.json"})
              .code == 2);
}
