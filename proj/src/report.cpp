#include "conelat/report.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

namespace conelat {

nlohmann::json to_json(const Report& r) {
  nlohmann::json j{{"name", r.name},
                   {"trials", r.trials},
                   {"failures", r.failures},
                   {"max_residual", r.max_residual},
                   {"seed", r.seed},
                   {"passed", r.passed()}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

nlohmann::json run_record(const RunConfig& cfg,
                          const std::vector<Report>& rs) {
  nlohmann::json reports = nlohmann::json::array();
  int failures = 0;
  for (const Report& r : rs) {
    reports.push_back(to_json(r));
    failures += r.failures;
  }
  return nlohmann::json{{"config",
                         {{"subcommand", cfg.subcommand},
                          {"field", cfg.field},
                          {"n", cfg.n},
                          {"trials", cfg.trials},
                          {"tol", cfg.tol},
                          {"seed", cfg.seed},
                          {"shape", cfg.shape}}},
                        {"reports", reports},
                        {"failures", failures},
                        {"passed", failures == 0}};
}

std::string human_text(const std::vector<Report>& rs) {
  std::ostringstream out;
  int failures = 0;
  for (const Report& r : rs) {
    failures += r.failures;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%s  %-34s trials=%-6d failures=%-4d max_residual=%.3e  "
                  "seed=%llu  (%.2fs)\n",
                  r.passed() ? "PASS" : "FAIL", r.name.c_str(), r.trials,
                  r.failures, r.max_residual,
                  static_cast<unsigned long long>(r.seed), r.elapsed);
    out << buf;
    if (!r.passed() && !r.witness.is_null())
      out << "      witness: " << r.witness.dump() << "\n";
  }
  out << (failures == 0 ? "all checks passed\n"
                        : "FAILURES: " + std::to_string(failures) + "\n");
  return out.str();
}

Report run_trials(const std::string& name, std::uint64_t seed,
                  std::uint64_t stream, int trials,
                  const std::function<TrialOutcome(Rng&, int)>& trial,
                  bool parallel) {
  struct Partial {
    int failures = 0;
    double max_residual = 0.0;
    int first_error = -1;
    std::string message;
  };

  auto run_range = [&](int begin, int end, int step) {
    Partial p;
    for (int i = begin; i < end; i += step) {
      Rng rng(derive_seed(seed, stream, static_cast<std::uint64_t>(i)));
      bool ok = false;
      double resid = 0.0;
      std::string err;
      try {
        TrialOutcome t = trial(rng, i);
        ok = t.ok && std::isfinite(t.residual);
        resid = std::isfinite(t.residual) ? t.residual : 1.0;
      } catch (const std::exception& e) {
        err = e.what();
        resid = 1.0;
      }
      if (!ok) {
        ++p.failures;
        if (p.first_error == -1) {
          p.first_error = i;
          p.message = err.empty() ? "residual out of tolerance" : err;
        }
      }
      p.max_residual = std::max(p.max_residual, resid);
    }
    return p;
  };

  const auto t0 = std::chrono::steady_clock::now();
  Partial total;
  unsigned hw = std::thread::hardware_concurrency();
  int workers = static_cast<int>(hw == 0 ? 1 : std::min(hw, 8u));
  if (!parallel || trials < 4 * workers) {
    total = run_range(0, trials, 1);
  } else {
    std::vector<Partial> parts(static_cast<size_t>(workers));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
      threads.emplace_back(
          [&, w] { parts[static_cast<size_t>(w)] = run_range(w, trials, workers); });
    for (std::thread& t : threads) t.join();
    for (const Partial& p : parts) {
      total.failures += p.failures;
      total.max_residual = std::max(total.max_residual, p.max_residual);
      if (p.first_error != -1 &&
          (total.first_error == -1 || p.first_error < total.first_error)) {
        total.first_error = p.first_error;
        total.message = p.message;
      }
    }
  }
  const auto t1 = std::chrono::steady_clock::now();

  Report r;
  r.name = name;
  r.trials = trials;
  r.failures = total.failures;
  r.max_residual = total.max_residual;
  r.elapsed = std::chrono::duration<double>(t1 - t0).count();
  r.seed = seed;
  if (total.first_error != -1)
    r.witness = nlohmann::json{{"first_failed_trial", total.first_error},
                               {"message", total.message}};
  return r;
}

}  // namespace conelat
