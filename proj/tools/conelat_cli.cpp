#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "conelat/io.hpp"
#include "conelat/suites.hpp"

using namespace conelat;

int main(int argc, char** argv) {
  CLI::App app{
      "conelat: facial geometry of psd cones, face lattices, the Albert "
      "plane, and the seven-point configuration in R^5"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("CONELAT_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (env[0] == '\0' || end == nullptr || *end != '\0') {
      std::cerr << "usage error: CONELAT_SEED must be a decimal integer\n";
      return 2;
    }
    cfg.seed = v;
  }

  std::string sections_mode;
  std::string r5_mode;
  const struct {
    const char* name;
    const char* help;
  } subs[] = {
      {"verify-cone", "nu-isomorphism, modular law, dimension formula, and "
                      "radial extensions on C_n(R/C/H)"},
      {"verify-lattice", "polytope face-lattice modularity and the star-join "
                         "product lemma"},
      {"verify-albert", "H_3(O) chart idempotents, duality, incidence, and "
                        "det/sigma vanishing"},
      {"r5", "printed-matrix fidelity, incidence table, factorization, spans, "
             "conics, and projective equivalence in R^5"},
      {"sections", "non-compact affine sections: compactness, unique rays, "
                   "shared directions, parallel classes"},
      {"all", "every suite with its defaults"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--field", cfg.field,
                    "coordinate algebra: R, C, H, or O (suite default "
                    "otherwise)");
    sub->add_option("--n", cfg.n, "matrix size (suite default otherwise)");
    sub->add_option("--trials", cfg.trials, "trial count override");
    sub->add_option("--seed", cfg.seed,
                    "root seed (default CONELAT_SEED or 20260815)");
    sub->add_option("--tol", cfg.tol, "tolerance override");
    sub->add_flag("--json", cfg.json, "emit the structured JSON run record");
    sub->add_option("--out", cfg.out_path, "write the report to this path");
    if (std::string(s.name) == "verify-lattice")
      sub->add_option("--shape", cfg.shape,
                      "one polytope from the corpus (point, segment, "
                      "simplex2..simplex4, square, pentagon, cube, "
                      "octahedron; triangle is an alias for simplex2)");
    if (std::string(s.name) == "sections")
      sub->add_option("mode", sections_mode, "optional mode: demo")
          ->check(CLI::IsMember({"demo"}));
    if (std::string(s.name) == "r5")
      sub->add_option("mode", r5_mode, "optional mode: report")
          ->check(CLI::IsMember({"report"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    std::vector<Report> reports;
    int failures = 0;
    std::string payload;
    if (cfg.subcommand == "r5" && r5_mode == "report") {
      if (!cfg.field.empty() && field_from_name(cfg.field) != Field::R)
        throw UsageError("the seven-point configuration lives in R^5 over R");
      nlohmann::json rep =
          r5_report(cfg.trials > 0 ? cfg.trials : 50, cfg.seed);
      failures = rep["failures"].get<int>();
      payload = cfg.json ? dump_canonical(rep) + "\n" : r5_report_text(rep);
    } else if (cfg.subcommand == "sections" && sections_mode == "demo") {
      Field f = cfg.field.empty() ? Field::R : field_from_name(cfg.field);
      if (f == Field::O) throw UsageError("sections supports R, C, H");
      int n = cfg.n > 0 ? cfg.n : 3;
      if (n < 2 || n > 5) throw UsageError("sections: --n must lie in 2..5");
      reports.push_back(sections_demo(f, n,
                                      cfg.trials > 0 ? cfg.trials : 40,
                                      cfg.seed));
      failures = reports.front().failures;
      payload = cfg.json ? dump_canonical(run_record(cfg, reports)) + "\n"
                         : human_text(reports) +
                               dump_canonical(reports.front().witness) + "\n";
    } else {
      reports = run_suite(cfg);
      for (const Report& r : reports) failures += r.failures;
      payload = cfg.json ? dump_canonical(run_record(cfg, reports)) + "\n"
                         : human_text(reports);
    }
    if (!cfg.out_path.empty()) {
      std::ofstream out(cfg.out_path);
      if (!out) {
        std::cerr << "usage error: cannot open " << cfg.out_path << "\n";
        return 2;
      }
      out << payload;
    } else {
      std::cout << payload;
    }
    return failures == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
