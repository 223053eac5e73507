#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "starspec/cli.hpp"

using namespace starspec;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return read_file(std::filesystem::path(STARSPEC_GOLDEN_DIR) / name);
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("golden outputs") {
  auto spectrum = run({"spectrum", "--n", "4"});
  CHECK(spectrum.code == 0);
  CHECK(spectrum.out == golden("spectrum_n4.txt"));

  auto bound = run({"bound", "--n", "4"});
  CHECK(bound.code == 0);
  CHECK(bound.out == golden("bound_n4.txt"));

  auto moments = run({"moments", "--n", "3", "--k-max", "4"});
  CHECK(moments.code == 0);
  CHECK(moments.out == golden("moments_n3_k4.txt"));
}

TEST_CASE("spectrum formats") {
  auto csv = run({"spectrum", "--n", "4", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "eigenvalue,multiplicity\n-3,1\n-2,6\n-1,3\n0,4\n1,3\n2,6\n3,1\n");

  auto js = run({"--format", "json", "spectrum", "--n", "2"});
  CHECK(js.code == 0);
  CHECK(js.out == "{\"n\":2,\"multiplicities\":{\"-1\":\"1\",\"1\":\"1\"}}\n");

  auto zeros = run({"spectrum", "--n", "3", "--format", "csv", "--include-zeros"});
  CHECK(zeros.out == "eigenvalue,multiplicity\n-2,1\n-1,2\n0,0\n1,2\n2,1\n");
  auto no_zeros = run({"spectrum", "--n", "3", "--format", "csv"});
  CHECK(no_zeros.out == "eigenvalue,multiplicity\n-2,1\n-1,2\n1,2\n2,1\n");
}

TEST_CASE("json round-trips byte-identically") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"spectrum", "--n", "12", "--format", "json"},
           {"bound", "--n", "9", "--format", "json"},
           {"moments", "--n", "5", "--format", "json"},
           {"verify", "--n", "4", "--format", "json"},
           {"semicircle", "--n", "16,36", "--bins", "5", "--format", "json"}}) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto parsed = nlohmann::ordered_json::parse(r.out);
    CHECK(parsed.dump() + "\n" == r.out);
  }
  auto big = nlohmann::ordered_json::parse(run({"spectrum", "--n", "22", "--format", "json"}).out);
  CHECK(big["multiplicities"]["21"] == "1");
  CHECK(big["multiplicities"]["0"].is_string());
}

TEST_CASE("deterministic output") {
  auto a = run({"semicircle", "--n", "9,16", "--p-max", "3"});
  auto b = run({"semicircle", "--n", "9,16", "--p-max", "3"});
  CHECK(a.out == b.out);
}

TEST_CASE("usage and limit errors") {
  CHECK(run({"spectrum", "--n", "0"}).code == cli::kUsage);
  CHECK(run({"spectrum"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"spectrum", "--n", "4", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--n", "abc"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--n", "51"}).code == cli::kSizeLimit);
  CHECK(run({"verify", "--n", "30"}).code == cli::kSizeLimit);
  CHECK(run({"moments", "--n", "10"}).code == cli::kSizeLimit);
  CHECK(run({"moments", "--n", "10", "--source", "table", "--k-max", "4"}).code == cli::kOk);
  CHECK(run({"bound", "--n", "1"}).code == cli::kUsage);
  auto err = run({"spectrum", "--n", "0"});
  CHECK(err.out.empty());
  CHECK_FALSE(err.err.empty());
}

TEST_CASE("verify") {
  auto v5 = run({"verify", "--n", "5"});
  CHECK(v5.code == 0);
  CHECK(v5.out == "identical, 9 eigenvalues, total 120\n");
  CHECK(run({"verify", "--n", "3"}).code == 0);
  CHECK(run({"verify", "--n", "3"}).out == "identical, 4 eigenvalues, total 6\n");
  auto csv = run({"verify", "--n", "2", "--format", "csv"});
  CHECK(csv.out == "eigenvalue,formula,oracle,match\n-1,1,1,true\n0,0,0,true\n1,1,1,true\n");
}

TEST_CASE("diff_tables") {
  SpectrumTable a(3, {{-2, 1}, {-1, 2}, {1, 2}, {2, 1}});
  SpectrumTable b(3, {{-2, 1}, {-1, 2}, {0, 1}, {1, 1}, {2, 1}});
  auto d = cli::diff_tables(a, b);
  REQUIRE(d.size() == 2);
  CHECK(d[0].eigenvalue == 0);
  CHECK(d[0].formula == 0);
  CHECK(d[0].oracle == 1);
  CHECK(d[1].eigenvalue == 1);
  CHECK(cli::diff_tables(a, a).empty());
}

TEST_CASE("moments") {
  auto m6 = run({"moments", "--n", "6", "--k-max", "2", "--format", "csv"});
  CHECK(m6.out == "k,walks,trace\n0,1,720\n1,0,0\n2,5,3600\n");
  auto walk = run({"moments", "--n", "6", "--format", "csv"});
  auto table = run({"moments", "--n", "6", "--format", "csv", "--source", "table"});
  CHECK(walk.out == table.out);
  CHECK(lines(walk.out).size() == 12);
}

TEST_CASE("semicircle") {
  auto r = run({"semicircle", "--n", "16", "--bins", "8", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  // report header + 1 row, blank, histogram header + 8 rows
  REQUIRE(ls.size() == 12);
  CHECK(ls[0] == "n,kolmogorov_distance,ratio_p1,ratio_p2,ratio_p3");
  CHECK(ls[3] == "n,bin_left,bin_right,empirical_mass,semicircle_mass");
  double total = 0;
  for (std::size_t i = 4; i < ls.size(); ++i) {
    std::istringstream row(ls[i]);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 5);
    total += std::stod(cells[3]);
  }
  CHECK(std::abs(total - 1.0) < 1e-10);

  auto js = nlohmann::json::parse(
      run({"semicircle", "--n", "36", "--p-max", "2", "--format", "json"}).out);
  CHECK(js["reports"][0]["moment_ratios"]["1"].get<double>() ==
        std::stod(cli::format_real(35.0 / 36.0)));

  auto out_path = std::filesystem::temp_directory_path() / "starspec_hist_test.csv";
  auto w = run({"semicircle", "--n", "4", "--bins", "4", "--out", out_path.string()});
  CHECK(w.code == 0);
  auto hist = lines(read_file(out_path));
  REQUIRE(hist.size() == 5);
  CHECK(hist[4].rfind("4,0.55,1.1,", 0) == 0);
  std::filesystem::remove(out_path);

  CHECK(run({"semicircle", "--n", "4", "--out", "/nonexistent-dir/x.csv"}).code == cli::kIoError);
  CHECK(run({"spectrum", "--n", "4", "--out", "/nonexistent-dir/x.txt"}).code == cli::kIoError);
}

TEST_CASE("format_real") {
  CHECK(cli::format_real(0.5) == "0.5");
  CHECK(cli::format_real(1.0 / 3) == "0.333333333333");
  CHECK(cli::format_real(-0.0) == "0");
}
