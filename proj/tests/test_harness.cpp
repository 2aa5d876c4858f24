#include <doctest.h>

#include <cmath>

#include "conelat/io.hpp"
#include "conelat/suites.hpp"

using namespace conelat;

namespace {

TrialOutcome flaky(Rng& rng, int) {
  double x = rng.uniform01();
  return TrialOutcome{x < 0.9, x};
}

}  // namespace

TEST_CASE("run_trials aggregates the same serially and in parallel") {
  Report serial = run_trials("t", 42, 7, 500, flaky, false);
  Report parallel = run_trials("t", 42, 7, 500, flaky, true);
  CHECK(serial.trials == 500);
  CHECK(serial.failures > 0);
  CHECK(serial.failures < 200);
  CHECK(serial.failures == parallel.failures);
  CHECK(serial.max_residual == parallel.max_residual);
  CHECK(to_json(serial) == to_json(parallel));

  Report again = run_trials("t", 42, 7, 500, flaky, true);
  CHECK(dump_canonical(to_json(again)) == dump_canonical(to_json(parallel)));
}

TEST_CASE("run_trials counts thrown trials and keeps the first witness") {
  Report r = run_trials("t", 1, 2, 50, [](Rng&, int i) {
    if (i == 17 || i == 31) throw CheckFailure("boom " + std::to_string(i));
    return TrialOutcome{true, 0.0};
  });
  CHECK(r.failures == 2);
  CHECK(r.witness["first_failed_trial"] == 17);
  CHECK(r.witness["message"] == "boom 17");
}

TEST_CASE("non-finite residuals are failures") {
  Report r = run_trials("t", 1, 3, 10, [](Rng&, int i) {
    return TrialOutcome{true, i == 4 ? std::nan("") : 0.0};
  });
  CHECK(r.failures == 1);
  CHECK(r.max_residual == 1.0);
}

TEST_CASE("report serialization omits elapsed and keeps witnesses") {
  Report r;
  r.name = "x";
  r.trials = 3;
  r.failures = 1;
  r.max_residual = 0.5;
  r.elapsed = 123.0;
  r.seed = 9;
  nlohmann::json j = to_json(r);
  CHECK(!j.contains("elapsed"));
  CHECK(!j.contains("witness"));
  CHECK(j["passed"] == false);
  r.witness = nlohmann::json{{"k", 1}};
  CHECK(to_json(r)["witness"]["k"] == 1);
}

TEST_CASE("identical configs replay to identical structured records") {
  RunConfig cfg;
  cfg.subcommand = "verify-lattice";
  cfg.shape = "square";
  std::string a = dump_canonical(run_record(cfg, run_suite(cfg)));
  std::string b = dump_canonical(run_record(cfg, run_suite(cfg)));
  CHECK(a == b);
  CHECK(a.find("\"witness\"") != std::string::npos);  // non-modular triple

  RunConfig cone;
  cone.subcommand = "verify-cone";
  cone.field = "R";
  cone.n = 3;
  cone.trials = 60;
  std::string c = dump_canonical(run_record(cone, run_suite(cone)));
  std::string d = dump_canonical(run_record(cone, run_suite(cone)));
  CHECK(c == d);

  cone.seed = 777;
  std::string e = dump_canonical(run_record(cone, run_suite(cone)));
  CHECK(c != e);
}

TEST_CASE("quaternionic cone suite replays deterministically at n = 4") {
  RunConfig cfg;
  cfg.subcommand = "verify-cone";
  cfg.field = "H";
  cfg.n = 4;
  cfg.trials = 500;
  cfg.seed = 7;
  auto reports = run_suite(cfg);
  for (const Report& r : reports) {
    INFO(r.name);
    CHECK(r.failures == 0);
  }
  CHECK(dump_canonical(run_record(cfg, reports)) ==
        dump_canonical(run_record(cfg, run_suite(cfg))));
}

TEST_CASE("r5 report carries the fidelity table and factorizations") {
  nlohmann::json rep = r5_report(20, 11);
  CHECK(rep["passed"] == true);
  CHECK(rep["fidelity"]["matches"] == 9);
  CHECK(rep["fidelity"]["entries"].size() == 9);
  for (const auto& f : rep["factorization"]) {
    REQUIRE(!f.contains("error"));
    CHECK(!f["linear"].get<std::string>().empty());
  }
  std::string text = r5_report_text(rep);
  CHECK(text.find("9/9 entries match") != std::string::npos);
  CHECK(text.find("factorization samples:") != std::string::npos);
  CHECK(text == r5_report_text(r5_report(20, 11)));
}

TEST_CASE("suite defaults pass at smoke scale") {
  RunConfig cfg;
  cfg.subcommand = "sections";
  cfg.trials = 40;
  for (const Report& r : run_suite(cfg)) {
    INFO(r.name);
    CHECK(r.failures == 0);
  }
  cfg.subcommand = "verify-albert";
  cfg.trials = 120;
  for (const Report& r : run_suite(cfg)) {
    INFO(r.name);
    CHECK(r.failures == 0);
  }
}

TEST_CASE("usage errors for invalid combinations") {
  RunConfig cfg;
  cfg.subcommand = "verify-cone";
  cfg.field = "O";
  CHECK_THROWS_AS(run_suite(cfg), UsageError);
  cfg.field = "Q";
  CHECK_THROWS_AS(run_suite(cfg), UsageError);

  RunConfig albert;
  albert.subcommand = "verify-albert";
  albert.field = "R";
  CHECK_THROWS_AS(run_suite(albert), UsageError);
  albert.field = "";
  albert.n = 4;
  CHECK_THROWS_AS(run_suite(albert), UsageError);

  RunConfig r5;
  r5.subcommand = "r5";
  r5.field = "H";
  CHECK_THROWS_AS(run_suite(r5), UsageError);

  RunConfig bogus;
  bogus.subcommand = "frobnicate";
  CHECK_THROWS_AS(run_suite(bogus), UsageError);

  RunConfig shape;
  shape.subcommand = "verify-lattice";
  shape.shape = "heptagon";
  CHECK_THROWS_AS(run_suite(shape), UsageError);
  shape.shape = "triangle";  // alias for simplex2
  auto rs = run_suite(shape);
  REQUIRE(!rs.empty());
  CHECK(rs.front().name == "lattice-shape/simplex2");
  CHECK(rs.front().failures == 0);
}
