#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "conelat/rational.hpp"

namespace conelat {

// Polynomials over Q in the six section variables a..f.
inline constexpr int kNumVars = 6;
inline constexpr std::array<const char*, kNumVars> kVarNames = {
    "a", "b", "c", "d", "e", "f"};

using Mono = std::array<int, kNumVars>;

class Poly {
 public:
  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly var(int i);

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  int degree_in(int var) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  friend Poly operator*(const Rational& c, const Poly& p) { return p * c; }

  Poly substituted(int var, const Rational& value) const;
  Rational eval(const std::array<Rational, kNumVars>& x) const;
  double eval(const std::array<double, kNumVars>& x) const;

  // coefficient of var^k, a polynomial in the other variables
  Poly coeff_in(int var, int k) const;

  Poly derivative(int var) const;

  const std::map<Mono, Rational>& terms() const { return terms_; }
  void add_term(const Mono& m, const Rational& c);

  // graded-lex ordered, explicit rational coefficients (e.g. "-1/2*a^2*c")
  std::string str() const;

 private:
  std::map<Mono, Rational> terms_;
};

// real roots of c3 x^3 + c2 x^2 + c1 x + c0 (degree may degenerate)
std::vector<double> real_roots_cubic(double c3, double c2, double c1,
                                     double c0);

}  // namespace conelat
