#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "locc/cli.hpp"
#include "locc/ensemble_file.hpp"
#include "locc/error.hpp"
#include "locc/sweep.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "locc-cli");
  std::ostringstream out, err;
  const int code = locc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("locc_test_" + name);
  std::ofstream(path) << content;
  return path;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("assist-cost and preserve-cost reference outputs") {
  const Run a = run({"assist-cost", "--a2", "0.5", "--c2", "0.5"});
  CHECK(a.code == 0);
  CHECK(has_line(a.out, "alpha2_max=0.5"));
  CHECK(has_line(a.out, "assist_cost_ebits=1"));

  const Run p = run({"preserve-cost", "--a2", "1", "--c2", "1"});
  CHECK(p.code == 0);
  CHECK(has_line(p.out, "preserve_cost_ebits=0"));

  const Run s = run({"preserve-cost", "--a2", "0.5", "--c2", "1"});
  CHECK(has_line(s.out, "preserve_spectrum=0.625,0.125,0.125,0.125"));
}

TEST_CASE("convert covers deterministic and probabilistic targets") {
  const Run n = run({"convert", "--source", "0.5,0.5", "--target", "1,0"});
  CHECK(n.code == 0);
  CHECK(has_line(n.out, "feasible=true"));

  const Run back = run({"convert", "--source", "1,0", "--target", "0.5,0.5"});
  CHECK(has_line(back.out, "feasible=false"));

  const Run jp = run({"convert", "--source", "0.5,0.5", "--target", "0.5:1,0", "--target", "0.5:0.5,0.5"});
  CHECK(jp.code == 0);
  CHECK(has_line(jp.out, "target=0.75,0.25"));
  CHECK(has_line(jp.out, "feasible=true"));

  CHECK(run({"convert", "--source", "0.5,0.4", "--target", "1,0"}).code == 2);
  CHECK(run({"convert", "--source", "0.5,abc", "--target", "1,0"}).code == 2);
  CHECK(run({"convert", "--source", "0.5,0.5", "--target", "0.3:1,0"}).code == 2);
}

TEST_CASE("--tol overrides the partial-sum tolerance") {
  const std::vector<std::string> base{"convert", "--source", "0.50000001,0.49999999", "--target", "0.5,0.5"};
  CHECK(has_line(run(base).out, "feasible=false"));
  auto loose = base;
  loose.insert(loose.begin(), {"--tol", "1e-6"});
  CHECK(has_line(run(loose).out, "feasible=true"));
}

TEST_CASE("discriminate, three-state and bounds") {
  const Run d = run({"discriminate", "--a2", "1", "--c2", "1"});
  CHECK(d.code == 0);
  CHECK(has_line(d.out, "feasible_unassisted=true"));
  CHECK(has_line(d.out, "closed_form_lhs=0.5"));
  CHECK(has_line(run({"discriminate", "--a2", "0.9", "--c2", "0.9"}).out, "feasible_unassisted=false"));

  CHECK(has_line(run({"three-state", "--a2", "0.5", "--c2", "0.5"}).out, "feasible_unassisted=false"));
  CHECK(has_line(run({"three-state", "--a2", "1", "--c2", "1", "--subset", "1,3,4"}).out, "feasible_unassisted=true"));
  CHECK(run({"three-state", "--a2", "1", "--c2", "1", "--subset", "1,1,4"}).code == 2);

  const Run b = run({"bounds", "--a2", "0.5", "--c2", "0.5"});
  CHECK(has_line(b.out, "n_robustness=2"));
  CHECK(has_line(b.out, "n_geometric=2"));
}

TEST_CASE("json mode uses record field names") {
  const Run a = run({"--json", "assist-cost", "--a2", "1", "--c2", "1"});
  REQUIRE(a.code == 0);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc.at("alpha2_max").get<double>() == 1.0);
  CHECK(doc.at("assist_cost_ebits").get<double>() == 0.0);
  CHECK(doc.at("a2").get<double>() == 1.0);

  const Run late = run({"preserve-cost", "--a2", "0.5", "--c2", "0.5", "--json"});
  CHECK(nlohmann::json::parse(late.out).at("preserve_cost_ebits").get<double>() == doctest::Approx(2.0));

  const Run sweep = run({"--json", "sweep", "--mode", "preserve", "--grid", "2"});
  const auto sdoc = nlohmann::json::parse(sweep.out);
  CHECK(sdoc.at("records").size() == 4);
  CHECK(sdoc.at("records")[0].at("alpha2_max").is_null());
}

TEST_CASE("error handling and exit codes") {
  const Run unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"assist-cost", "--a2", "0.3", "--c2", "0.5"}).code == 2);
  CHECK(run({"assist-cost", "--a2", "0.5"}).code == 2);
  CHECK(run({"assist-cost"}).code == 2);
  CHECK(run({"sweep", "--mode", "bogus"}).code == 2);
  CHECK(run({"sweep", "--grid", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sweep --out writes the CSV contract") {
  const auto path = std::filesystem::temp_directory_path() / "locc_test_sweep.csv";
  const Run r = run({"sweep", "--mode", "assist", "--grid", "5", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(file == locc::to_csv(locc::run_sweep({locc::SweepMode::assist, 5, {}, {0, 1, 2}})));
  std::filesystem::remove(path);
}

TEST_CASE("ensemble files: family form") {
  const auto f = temp_file("family.json", R"({"family": {"a2": 0.5, "c2": 1.0}})");
  const Run r = run({"preserve-cost", "--ensemble", f.string()});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "preserve_cost_ebits=1.5487949407"));

  const auto skew = temp_file("skew.json", R"({"family": {"a2": 0.8, "c2": 0.6}, "probs": [0.5, 0.5, 0, 0]})");
  CHECK(run({"assist-cost", "--ensemble", skew.string()}).code == 0);
  CHECK(run({"assist-cost", "--ensemble", f.string(), "--a2", "0.5"}).code == 2);
}

TEST_CASE("ensemble files: states form and renormalization") {
  const auto ok = temp_file("states.json", R"({
    "states": [
      {"amplitudes": [[0.70710678,0],[0,0],[0,0],[0.70710678,0]], "dim_a": 2, "dim_b": 2},
      {"amplitudes": [[0.70710678,0],[0,0],[0,0],[-0.70710678,0]], "dim_a": 2, "dim_b": 2},
      {"amplitudes": [[0,0],[0.70710678,0],[0.70710678,0],[0,0]], "dim_a": 2, "dim_b": 2},
      {"amplitudes": [[0,0],[0.70710678,0],[-0.70710678,0],[0,0]], "dim_a": 2, "dim_b": 2}
    ],
    "probs": [0.25, 0.25, 0.25, 0.25]})");
  const Run r = run({"discriminate", "--ensemble", ok.string()});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "feasible_unassisted=false"));
  CHECK(r.err.find("warning") != std::string::npos);
  const Run b = run({"bounds", "--ensemble", ok.string()});
  CHECK(has_line(b.out, "n_rel_entropy=2"));

  const auto off = temp_file("off.json", R"({"states": [{"amplitudes": [[0.9,0],[0,0]], "dim_a": 1, "dim_b": 2}], "probs": [1]})");
  CHECK(run({"bounds", "--ensemble", off.string()}).code == 2);
}

TEST_CASE("ensemble file schema violations") {
  using nlohmann::json;
  CHECK_THROWS_AS(locc::parse_ensemble_json(json::parse(R"({})")), locc::ValidationError);
  CHECK_THROWS_AS(locc::parse_ensemble_json(json::parse(
                      R"({"family": {"a2": 0.5, "c2": 0.5}, "states": []})")),
                  locc::ValidationError);
  CHECK_THROWS_AS(locc::parse_ensemble_json(json::parse(R"({"family": {"a2": 0.5}})")), locc::ValidationError);
  CHECK_THROWS_AS(locc::parse_ensemble_json(json::parse(
                      R"({"states": [{"amplitudes": [[1,0]], "dim_a": 1, "dim_b": 2}], "probs": [1]})")),
                  locc::ValidationError);
  CHECK_THROWS_AS(locc::parse_ensemble_json(json::parse(
                      R"({"states": [{"amplitudes": [[1,0],[0,0]], "dim_a": 1, "dim_b": 2}]})")),
                  locc::ValidationError);
  const auto good = locc::parse_ensemble_json(json::parse(
      R"({"states": [{"amplitudes": [[1,0],[0,0]], "dim_a": 1, "dim_b": 2}], "probs": [1]})"));
  CHECK(good.ensemble.has_value());
  CHECK(good.warnings.empty());

  const auto missing = std::filesystem::temp_directory_path() / "locc_test_missing.json";
  CHECK(run({"bounds", "--ensemble", missing.string()}).code == 2);
  const auto broken = temp_file("broken.json", "{not json");
  CHECK(run({"bounds", "--ensemble", broken.string()}).code == 2);
}
