#include "conelat/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace conelat {

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (c != 0) p.terms_[{0, 0, 0, 0, 0, 0}] = c;
  return p;
}

Poly Poly::var(int i) {
  Poly p;
  Mono m{};
  m[i] = 1;
  p.terms_[m] = 1;
  return p;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

void Poly::add_term(const Mono& m, const Rational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_[m] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Mono m;
      for (int i = 0; i < kNumVars; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

Poly Poly::substituted(int var, const Rational& value) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    for (int k = 0; k < m[var]; ++k) coef *= value;
    Mono m2 = m;
    m2[var] = 0;
    r.add_term(m2, coef);
  }
  return r;
}

Rational Poly::eval(const std::array<Rational, kNumVars>& x) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kNumVars; ++i)
      for (int k = 0; k < m[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

double Poly::eval(const std::array<double, kNumVars>& x) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = rat_to_double(c);
    for (int i = 0; i < kNumVars; ++i)
      for (int k = 0; k < m[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Poly Poly::coeff_in(int var, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Mono m2 = m;
    m2[var] = 0;
    r.add_term(m2, c);
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono m2 = m;
    m2[var] -= 1;
    r.add_term(m2, c * m[var]);
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // graded lex: sort by (total degree desc, lex)
  std::vector<std::pair<Mono, Rational>> ts(terms_.begin(), terms_.end());
  auto tdeg = [](const Mono& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
  };
  std::sort(ts.begin(), ts.end(), [&](const auto& x, const auto& y) {
    int dx = tdeg(x.first), dy = tdeg(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : ts) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_var = tdeg(m) > 0;
    if (!has_var || ac != 1) {
      out << rat_to_string(ac);
      if (has_var) out << "*";
    }
    bool fv = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      if (!fv) out << "*";
      fv = false;
      out << kVarNames[i];
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

std::vector<double> real_roots_cubic(double c3, double c2, double c1,
                                     double c0) {
  const double scale =
      std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0), 1.0});
  if (std::abs(c3) < 1e-13 * scale) {
    if (std::abs(c2) < 1e-13 * scale) {
      if (std::abs(c1) < 1e-13 * scale) return {};
      return {-c0 / c1};
    }
    double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0) return {};
    double sq = std::sqrt(disc);
    return {(-c1 - sq) / (2.0 * c2), (-c1 + sq) / (2.0 * c2)};
  }
  // monic depressed form x = u - b/3
  double b = c2 / c3, c = c1 / c3, d = c0 / c3;
  double p = c - b * b / 3.0;
  double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  double disc = -4.0 * p * p * p - 27.0 * q * q;
  std::vector<double> roots;
  if (disc >= -1e-12 * std::pow(std::max({1.0, std::abs(p), std::abs(q)}), 3)) {
    if (std::abs(p) < 1e-14) {
      roots = {std::cbrt(-q)};
    } else {
      double m = 2.0 * std::sqrt(std::max(-p / 3.0, 0.0));
      if (m == 0.0) {
        roots = {std::cbrt(-q)};
      } else {
        double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
          roots.push_back(m * std::cos(theta - 2.0 * M_PI * k / 3.0));
      }
    }
  } else {
    // one real root via Cardano
    double sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    double u = std::cbrt(-q / 2.0 + sq), v = std::cbrt(-q / 2.0 - sq);
    roots = {u + v};
  }
  for (double& r : roots) r -= b / 3.0;
  // polish with a couple of Newton steps
  for (double& r : roots)
    for (int it = 0; it < 3; ++it) {
      double f = ((c3 * r + c2) * r + c1) * r + c0;
      double df = (3.0 * c3 * r + 2.0 * c2) * r + c1;
      if (std::abs(df) > 1e-14) r -= f / df;
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace conelat
