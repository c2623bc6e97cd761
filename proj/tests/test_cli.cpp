#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "tautclass/cli.hpp"
#include "tautclass/io.hpp"

using namespace tautclass;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  ::setenv("TAUTCLASS_FIXTURES", TAUTCLASS_FIXTURE_DIR, 1);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("verify suites") {
  Run r = run({"verify", "witt-relations", "--samples", "200", "--seed", "7"});
  CHECK(r.code == exit_pass);
  CHECK(r.json()["suite"] == "witt-relations");
  CHECK(r.json()["samples"] == 200);
  CHECK(r.json()["failures"].empty());
  CHECK(r.json()["seed"] == 7);
  CHECK(r.json().contains("elapsed"));

  CHECK(run({"verify", "euler-boundary", "--n", "4", "--samples", "100"}).code == exit_pass);
  CHECK(run({"verify", "alternation", "--n", "2", "--field", "quad:3"}).code == exit_pass);

  r = run({"verify", "smillie", "--rep", "fixtures/g2_swap.json"});
  CHECK(r.code == exit_pass);
  CHECK(r.json()["details"][0]["factors"] == Json::array({1, -3}));
  r = run({"verify", "comparison", "--rep", "g2_doubled_torus.json", "--rep", "g2_doubled_torus_reversed.json"});
  CHECK(r.code == exit_pass);
  CHECK(r.json()["details"][1]["eu0"] == -1);
  CHECK(r.json()["details"][1]["witt_signature"] == -4);
}

TEST_CASE("eval") {
  Run r = run({"eval", "--rep", "fixtures/g1_diag.json", "--selector", "eu0", "--oracle"});
  CHECK(r.code == exit_pass);
  CHECK(r.json()["value"]["value"] == 0);
  CHECK(r.json()["oracle"] == 0);
  CHECK(r.json()["agree"] == true);

  r = run({"eval", "--rep", "fixtures/g2_swap.json", "--selector", "euplus"});
  CHECK(r.code == exit_pass);
  CHECK(r.json()["linear_relation"] == 0);
  CHECK(r.json()["homological_core"] == true);

  r = run({"eval", "--rep", "g2_doubled_torus.json", "--selector", "witt", "--seed", "4"});
  CHECK(r.code == exit_pass);
  CHECK(r.json()["value"]["invariants"]["signature"] == 4);
  CHECK(r.json()["simplices"].size() == 6);
  CHECK(r.json()["seed"] == 4);

  r = run({"eval", "--rep", "g2_doubled_torus_reversed.json", "--oracle"});
  CHECK(r.json()["value"]["value"] == -1);
  CHECK(r.json()["oracle"] == -1);

  r = run({"eval", "--rep", "g2_solved_dt.json", "--selector", "euk:1"});
  CHECK(r.json()["value"]["value"] == -3);
  r = run({"eval", "--rep", "g2_solved_dt.json", "--selector", "eu"});
  CHECK(r.json()["value"]["value"] == 4);
  r = run({"eval", "--rep", "g1_sqrt2.json", "--selector", "euplus"});
  CHECK(r.code == exit_pass);
}

TEST_CASE("product") {
  Run r = run({"product", "--repA", "g1_diag.json", "--repB", "g1_diag.json"});
  CHECK(r.code == exit_pass);
  CHECK(r.json()["left"] == 0);
  CHECK(r.json()["right"] == 0);
  CHECK(r.json()["product"] == 0);

  r = run({"product", "--repA", "g2_doubled_torus.json", "--repB", "g2_doubled_torus_reversed.json", "--seed", "2"});
  CHECK(r.code == exit_pass);
  CHECK(r.json()["left_times_right"] == -1);
  CHECK(r.json()["product"] == -1);
  CHECK(r.json()["cup"] == -1);
  CHECK(r.json()["simplices"] == 216);

  r = run({"product", "--repA", "g1_line.json", "--repB", "g2_rank3_scalar.json"});
  CHECK(r.code == exit_pass);
  CHECK(r.json()["mixed"] == true);
  CHECK(r.json()["product"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "nonsense"}).code == exit_usage);
  CHECK(run({}).code == exit_usage);
  CHECK(run({"verify", "witt-relations", "--samples", "many"}).code == exit_usage);
  CHECK(run({"verify", "euler-boundary", "--field", "R"}).code == exit_usage);
  CHECK(run({"verify", "witt-cocycle", "--field", "quad:2"}).code == exit_usage);
  CHECK(run({"eval", "--selector", "eu0"}).code == exit_usage);
  CHECK(run({"eval", "--rep", "g2_swap.json", "--selector", "chern"}).code == exit_usage);
  CHECK(run({"eval", "--rep", "g2_swap_sqrt2.json", "--selector", "witt"}).code == exit_usage);
  CHECK(run({"eval", "--rep", "g2_swap.json", "--selector", "euk:2"}).code == exit_usage);
  CHECK(run({"product", "--repA", "g1_sqrt2.json", "--repB", "g1_diag.json"}).code == exit_usage);
  CHECK(run({"product", "--repA", "g1_line.json", "--repB", "g1_diag.json"}).code == exit_usage);

  Run bad = run({"eval", "--rep", "bad_relator.json"});
  CHECK(bad.code == exit_invalid_representation);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("residual") != std::string::npos);
  CHECK(run({"eval", "--rep", "g2_octagon.json"}).code == exit_invalid_representation);
  CHECK(run({"eval", "--rep", "no_such_file.json"}).code == exit_invalid_representation);
  CHECK(run({"explore", "oracle", "--rep", "bad_relator.json"}).code == exit_invalid_representation);

  Run exhausted = run({"product", "--repA", "g2_swap.json", "--repB", "g2_swap.json", "--retry-budget", "0"});
  CHECK(exhausted.code == exit_resampling);
  CHECK(exhausted.out.empty());

  CHECK(run({"--help"}).code == exit_pass);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "witt-cocycle", "--samples", "20", "--seed", "3", "--no-timing"},
      {"verify", "smillie", "--rep", "g2_doubled_torus.json", "--no-timing"},
      {"eval", "--rep", "g2_doubled_torus.json", "--selector", "witt", "--seed", "11"},
      {"product", "--repA", "g2_doubled_torus.json", "--repB", "g2_swap.json", "--seed", "5"},
  };
  for (const auto& c : commands) {
    const Run a = run(c), b = run(c);
    CHECK(a.code == exit_pass);
    CHECK(a.out == b.out);
  }
  CHECK(run({"eval", "--rep", "g2_doubled_torus.json", "--seed", "1"}).out !=
        run({"eval", "--rep", "g2_doubled_torus.json", "--seed", "2"}).out);
}

TEST_CASE("csv and exploration") {
  Run r = run({"verify", "witt-relations", "--samples", "5", "--no-timing", "--csv"});
  CHECK(r.code == exit_pass);
  CHECK(r.out.rfind("suite,samples,failures,elapsed,seed,n,field\nwitt-relations,5,[],0.0,1,2,Q\n", 0) == 0);

  r = run({"explore", "oracle", "--rep", "g2_octagon.json"});
  CHECK(r.code == exit_pass);
  CHECK(std::abs(r.json()["oracle"].get<int>()) == 1);

  r = run({"explore", "search", "--samples", "40", "--seed", "2"});
  CHECK(r.code == exit_pass);
  for (const auto& hit : r.json()["hits"]) CHECK(hit["oracle"] == hit["eu0"]);

  r = run({"explore", "torsion", "--rep", "g2_doubled_torus.json"});
  CHECK(r.code == exit_pass);
  CHECK(r.json()["results"][0]["invariants"]["signature"] == 4);
}
