#include <sstream>

#include <doctest.h>

#include "itsdeal/config.hpp"
#include "itsdeal/runner.hpp"
#include "itsdeal/trace.hpp"

using namespace itsdeal;
using doctest::Approx;

TEST_CASE("defaults") {
  const Config c;
  CHECK(c.get("alg") == "ideals");
  CHECK(c.real("p") == 1.25);
  CHECK(c.integer("instance.n") == 1000);
  CHECK(c.real("instance.lambda_bar") == 0.5);
  CHECK_FALSE(c.opt_real("mu"));
  CHECK(c.flag("trace.clock"));
  CHECK(c.real_list("bench.thresholds") == std::vector<double>{1e-2, 1e-3});
  const HomeParams P = home_params(c);
  CHECK(P.p == 1.25);
  CHECK(P.scenario == Scenario::S3);
  CHECK(std::isnan(P.omega));
}

TEST_CASE("validation") {
  Config c;
  CHECK_THROWS_AS(c.set("nope", "1"), ConfigError);
  CHECK_THROWS_AS(c.set("p", "abc"), ConfigError);
  CHECK_THROWS_AS(c.set("instance.n", "1.5"), ConfigError);
  CHECK_THROWS_AS(c.set("alg", "adam"), ConfigError);
  CHECK_THROWS_AS(c.set("trace.clock", "maybe"), ConfigError);
  CHECK_THROWS_AS(c.set_assignment("novalue"), ConfigError);
  c.set_assignment("mu=0.3");
  CHECK(*c.opt_real("mu") == 0.3);
  c.set("mu", "auto");
  CHECK_FALSE(c.opt_real("mu"));
}

TEST_CASE("parse config text") {
  std::istringstream in(
      "# desk run\n"
      "alg = pf-higda\n"
      "\n"
      "pf.scenario = S1\n"
      "p=1.5\n");
  Config c;
  c.parse(in);
  CHECK(c.get("alg") == "pf-higda");
  CHECK(home_params(c).scenario == Scenario::S1);
  CHECK(c.real("p") == 1.5);
  std::istringstream bad("p 1.5\n");
  CHECK_THROWS_AS(c.parse(bad), ConfigError);
}

TEST_CASE("roster") {
  const auto r = parse_roster("ideals(p=1.5, omega=2); sg-css(sg.alpha=1) ;pf-higda");
  REQUIRE(r.size() == 3);
  CHECK(r[0].alg == "ideals");
  CHECK(r[0].overrides.size() == 2);
  CHECK(r[0].label() == "ideals_p-1.5_omega-2");
  CHECK(r[2].label() == "pf-higda");
  const Config c = r[1].apply(Config{});
  CHECK(c.get("alg") == "sg-css");
  CHECK(c.real("sg.alpha") == 1.0);
  CHECK_THROWS_AS(parse_roster("ideals(p=1.5"), ConfigError);
}

TEST_CASE("trace CSV round trip") {
  Config c;
  c.set("problem", "quadratic");
  c.set("dim", "3");
  c.set("stop.max_iters", "15");
  c.set("budget_s", "0");
  c.set("p", "1.5");
  const Problem prob = make_problem(c);
  const RunTrace t = run_algorithm(c, prob);
  std::stringstream ss;
  write_trace_csv(ss, output_header(c), t);
  const std::string text = ss.str();
  CHECK(text.rfind("# alg=ideals\n", 0) == 0);

  std::istringstream h(text);
  CHECK(Config::from_header(h) == c);

  std::istringstream r(text);
  const TraceFile tf = read_trace_csv(r);
  REQUIRE(tf.rows.size() == t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(tf.rows[i].iter == t.rows[i].iter);
    CHECK(tf.rows[i].value_eps == t.rows[i].value_eps);
    CHECK(tf.rows[i].grad_eps_norm == t.rows[i].grad_eps_norm);
    CHECK(tf.rows[i].backtracks == t.rows[i].backtracks);
    CHECK(tf.rows[i].decrease_ok == t.rows[i].decrease_ok);
  }
  CHECK(tf.header_value("meta.status") == to_string(t.status));
  CHECK(tf.header_value("meta.format") == "itsdeal-trace-v1");
  CHECK(tf.header_value("run.alg") == "ideals");
}

TEST_CASE("trace columns") {
  const auto& cols = trace_columns();
  CHECK(cols.front() == "iter");
  CHECK(std::find(cols.begin(), cols.end(), "relative_error") != cols.end());
  CHECK(std::find(cols.begin(), cols.end(), "inner_iters") != cols.end());
}

TEST_CASE("problem construction") {
  Config c;
  c.set("problem", "quartic");
  c.set("x0", "1.5");
  const Problem p = make_problem(c);
  CHECK(p.f.dim == 1);
  CHECK(p.x0[0] == 1.5);
  c.set("problem", "rsr");
  c.set("instance.n", "20");
  c.set("instance.m", "10");
  c.set("instance.k1", "2");
  c.set("instance.k2", "1");
  c.set("x0", "auto");
  const Problem r = make_problem(c);
  CHECK(r.x0.size() == 20);
  CHECK(r.x0.norm() == 0.0);
  REQUIRE(r.x_true);
  c.set("alg", "higda");
  CHECK_THROWS_AS(run_algorithm(c, r), ConfigError);
}
