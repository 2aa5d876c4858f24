#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "conelat/suites.hpp"

using namespace conelat;

namespace {

constexpr std::uint64_t kSeed = 20260815;

struct Agg {
  int trials = 0;
  int failures = 0;
  double resid = 0.0;
  std::string note;

  void add(const Report& r) {
    trials += r.trials;
    failures += r.failures;
    resid = std::max(resid, r.max_residual);
    if (r.failures > 0 && !r.witness.is_null() && note.size() < 400) {
      if (!note.empty()) note += "; ";
      note += r.name + ": " + r.witness.dump();
    }
  }
  bool ok() const { return failures == 0; }
};

int g_failed = 0;

void criterion(int id, const char* label, double cap_seconds,
               const std::function<Agg()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Agg a;
  bool threw = false;
  try {
    a = body();
  } catch (const std::exception& e) {
    threw = true;
    a.failures = std::max(a.failures, 1);
    a.note = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  bool timed_out = cap_seconds > 0 && dt > cap_seconds;
  bool pass = a.ok() && !timed_out && !threw;
  if (!pass) ++g_failed;

  std::ostringstream line;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s  criterion %02d  %-38s", pass ? "PASS" : "FAIL",
                id, label);
  line << buf;
  std::snprintf(buf, sizeof(buf), " trials=%-6d max_residual=%.2e", a.trials,
                a.resid);
  line << buf;
  if (cap_seconds > 0)
    std::snprintf(buf, sizeof(buf), "  (%.1fs / cap %.0fs)", dt, cap_seconds);
  else
    std::snprintf(buf, sizeof(buf), "  (%.1fs)", dt);
  line << buf;
  if (timed_out) line << "  [time cap exceeded]";
  if (!a.ok()) line << "  failures=" << a.failures;
  if (!pass && !a.note.empty()) {
    std::string note = a.note;
    std::replace(note.begin(), note.end(), '\n', ' ');
    line << "  " << note;
  }
  std::printf("%s\n", line.str().c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "nu-isomorphism face identities", 60, [] {
    Agg a;
    for (Field f : {Field::R, Field::C, Field::H})
      a.add(check_nu_identities(f, 6, 1000, kSeed, 1e-9));
    return a;
  });

  criterion(2, "modular law and witnesses", 30, [] {
    Agg a;
    for (Field f : {Field::R, Field::C, Field::H})
      a.add(check_modular_law(f, 6, 1000, kSeed));
    for (const char* s : {"square", "cube"}) a.add(check_polytope_shape(s));
    for (const char* s :
         {"point", "segment", "simplex2", "simplex3", "simplex4"})
      a.add(check_polytope_shape(s));
    return a;
  });

  criterion(3, "star-join product lemma", 10, [] {
    Agg a;
    a.add(check_product_lemma());
    return a;
  });

  criterion(4, "dimension formula 5/8/14/26", 0, [] {
    Agg a;
    a.add(check_dimension_formula());
    return a;
  });

  criterion(5, "Albert plane operations", 120, [] {
    Agg a;
    a.add(check_albert_chart(10000, kSeed, 1e-10));
    a.add(check_albert_duality(1000, kSeed, 1e-7));
    a.add(check_albert_incidence(500, kSeed, 1e-7));
    a.add(check_albert_det_sigma(10000, kSeed, 1e-9));
    return a;
  });

  criterion(6, "printed-matrix fidelity 9/9", 0, [] {
    Agg a;
    a.add(check_r5_fidelity());
    a.add(check_r5_incidence());
    return a;
  });

  criterion(7, "rational factorization 100 (c,d)", 60, [] {
    Agg a;
    a.add(check_r5_factorization(100, kSeed));
    return a;
  });

  criterion(8, "spans test accepts/rejects 200+200", 0, [] {
    Agg a;
    a.add(check_r5_spans(200, kSeed, 1e-8));
    return a;
  });

  criterion(9, "boundary conics held-out residual", 0, [] {
    Agg a;
    a.add(check_r5_conics(40, 100, 1e-7));
    return a;
  });

  criterion(10, "projective equivalence transport", 0, [] {
    Agg a;
    a.add(check_r5_equivalence(20, 10, kSeed, 1e-7));
    return a;
  });

  criterion(11, "radial extension identity/conjugation", 0, [] {
    Agg a;
    for (Field f : {Field::R, Field::C, Field::H}) {
      a.add(check_radial_identity(f, 3, 334, kSeed, 1e-9));
      a.add(check_radial_conjugation(f, 3, 34, kSeed, 1e-9));
    }
    return a;
  });

  criterion(12, "non-compact sections program", 0, [] {
    Agg a;
    a.add(check_sections_compactness(200, kSeed));
    a.add(check_sections_unique_ray(200, kSeed));
    a.add(check_sections_shared_directions(200, kSeed));
    a.add(check_sections_classes(60, 6, kSeed));
    return a;
  });

  if (g_failed == 0) {
    std::printf("acceptance: 12/12 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d/12 criteria FAILED\n", g_failed);
  return 1;
}
