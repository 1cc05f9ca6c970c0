#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <doctest.h>

#include "itsdeal/bench.hpp"

using namespace itsdeal;
namespace fs = std::filesystem;

TEST_CASE("sub-seeds") {
  CHECK(sub_seed(7, "k1-50", 0) == sub_seed(7, "k1-50", 0));
  std::set<std::uint64_t> seen;
  for (const char* cell : {"k1-50", "k1-60", "k1-70"})
    for (int t = 0; t < 20; ++t) seen.insert(sub_seed(7, cell, t));
  CHECK(seen.size() == 60);
  CHECK(sub_seed(7, "k1-50", 0) != sub_seed(8, "k1-50", 0));
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
}

TEST_CASE("success probability") {
  std::vector<TrialOutcome> o;
  for (int i = 0; i < 4; ++i) {
    TrialOutcome t;
    t.algorithm = "a";
    t.cell = "k1-5";
    t.final_relative_error = std::pow(10.0, -1 - i);
    o.push_back(t);
    t.algorithm = "stuck";
    t.final_relative_error = 1.0;
    o.push_back(t);
  }
  const SuccessTable tab = success_probability(o, {1e-1, 1e-2, 1e-3});
  REQUIRE(tab.cells.size() == 6);
  CHECK(tab.cells[0].algorithm == "a");
  CHECK(tab.cells[0].successes == 3);
  CHECK(tab.cells[1].successes == 2);
  CHECK(tab.cells[2].successes == 1);
  for (const auto& c : tab.cells)
    if (c.algorithm == "stuck") CHECK(c.probability() == 0.0);
}

TEST_CASE("best variant per p") {
  std::vector<TrialOutcome> o;
  auto add = [&](const char* v, double e) {
    TrialOutcome t;
    t.algorithm = v;
    t.base = "ideals";
    t.p = 1.5;
    t.cell = "k1-5";
    t.final_relative_error = e;
    o.push_back(t);
  };
  add("w0", 0.1);
  add("w0", 0.1);
  add("w1", 0.01);
  add("w1", kNaN);
  add("w2", 0.05);
  add("w2", 0.05);
  const auto best = select_best(o);
  REQUIRE(best.size() == 1);
  CHECK(best[0].best_variant == "w2");
}

TEST_CASE("roster expansion") {
  Config c;
  c.set("bench.kind", "sweep_p");
  c.set("bench.p", "1.25,1.5");
  c.set("bench.roster", "pf-higda; ideals");
  const auto v = expand_roster(c);
  CHECK(v.size() == 2 * 3 + 2 * 6);
  std::set<std::string> labels;
  for (const auto& b : v) labels.insert(b.label);
  CHECK(labels.size() == v.size());
  c.set("bench.roster", "");
  CHECK_THROWS_AS(expand_roster(c), ConfigError);
}

TEST_CASE("small bench writes its tables and respects the budget") {
  Config c;
  c.set("bench.name", "unit");
  c.set("bench.roster", "ideals; sg-css(sg.alpha=1)");
  c.set("bench.k1", "3");
  c.set("bench.trials", "2");
  c.set("instance.n", "40");
  c.set("instance.m", "20");
  c.set("instance.k2", "2");
  c.set("budget_s", "0.2");
  const fs::path root = fs::temp_directory_path() / "itsdeal_unit_bench";
  fs::remove_all(root);
  BenchOptions b;
  b.out_root = root.string();
  b.jobs = 2;
  const BenchResult r = run_bench(c, b);
  CHECK(r.outcomes.size() == 4);
  CHECK(r.failures == 0);
  for (const auto& o : r.outcomes) INFO(o.status, " ", o.message);
  if (r.failures) MESSAGE(r.outcomes[0].message);
  CHECK(fs::exists(root / "unit" / "summary.csv"));
  CHECK(fs::exists(root / "unit" / "final.csv"));
  CHECK_FALSE(fs::exists(root / "unit" / "failures.csv"));
  CHECK(fs::exists(root / "unit" / "ideals" / "k1-3" / "trial1.csv"));
  for (const auto& o : r.outcomes) CHECK(o.elapsed_s <= 0.2 + 0.5);
  CHECK(r.outcomes[0].seed == r.outcomes[2].seed);
  std::ifstream s(root / "unit" / "summary.csv");
  std::string first;
  std::getline(s, first);
  while (!first.empty() && first[0] == '#') std::getline(s, first);
  CHECK(first == "algorithm,cell,k1,threshold,successes,trials,probability");
  fs::remove_all(root);

  c.set("budget_s", "0");
  CHECK_THROWS_AS(run_bench(c, b), ConfigError);
}
