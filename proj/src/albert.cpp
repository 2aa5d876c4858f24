#include "conelat/albert.hpp"

#include <algorithm>

#include "conelat/rng.hpp"

namespace conelat {

AlbertElement::AlbertElement(double a, double b, double c, const Alg& x,
                             const Alg& y, const Alg& z)
    : m_(Field::O, 3) {
  if (x.field() != Field::O || y.field() != Field::O || z.field() != Field::O)
    throw std::invalid_argument("off-diagonal slots must be octonions");
  m_.set(0, 0, Alg::scalar(Field::O, a));
  m_.set(1, 1, Alg::scalar(Field::O, b));
  m_.set(2, 2, Alg::scalar(Field::O, c));
  m_.set(0, 1, z);
  m_.set(0, 2, y);
  m_.set(1, 2, x);
}

AlbertElement AlbertElement::from_herm(const Herm& h) {
  if (h.field() != Field::O || h.n() != 3)
    throw std::invalid_argument("expected a 3x3 octonion Hermitian matrix");
  AlbertElement a;
  a.m_ = h;
  return a;
}

AlbertElement AlbertElement::identity() {
  return from_herm(Herm::identity(Field::O, 3));
}

AlbertElement AlbertElement::diag_unit(int i) {
  AlbertElement a;
  Herm h(Field::O, 3);
  h.set(i, i, Alg::one(Field::O));
  a.m_ = h;
  return a;
}

AlbertElement AlbertElement::operator+(const AlbertElement& o) const {
  return from_herm(m_ + o.m_);
}
AlbertElement AlbertElement::operator-(const AlbertElement& o) const {
  return from_herm(m_ - o.m_);
}
AlbertElement AlbertElement::operator*(double s) const {
  return from_herm(m_ * s);
}

AlbertElement jordan(const AlbertElement& a, const AlbertElement& b) {
  return AlbertElement::from_herm(jordan(a.herm(), b.herm()));
}

double trace(const AlbertElement& a) { return a.herm().trace(); }

double inner(const AlbertElement& a, const AlbertElement& b) {
  return trace(jordan(a, b));
}

double fro_norm(const AlbertElement& a) { return fro_norm(a.herm()); }

bool approx_eq(const AlbertElement& a, const AlbertElement& b, double tol) {
  return approx_eq(a.herm(), b.herm(), tol);
}

double sigma(const AlbertElement& a) {
  double t = trace(a);
  return 0.5 * (t * t - inner(a, a));
}

double det(const AlbertElement& a) {
  double d0 = a.diag(0), d1 = a.diag(1), d2 = a.diag(2);
  Alg x = a.x(), y = a.y(), z = a.z();
  return d0 * d1 * d2 - d0 * x.norm2() - d1 * y.norm2() - d2 * z.norm2() +
         2.0 * ((z * x) * y.conj()).re();
}

double det_trace_oracle(const AlbertElement& a) {
  AlbertElement a2 = jordan(a, a);
  AlbertElement a3 = jordan(a, a2);
  double t = trace(a);
  return (trace(a3) - t * trace(a2) + sigma(a) * t) / 3.0;
}

std::array<double, 3> albert_eigenvalues(const AlbertElement& a,
                                         double disc_tol) {
  const double t = trace(a), s = sigma(a), d = det(a);
  // depressed cubic u^3 + p u + q2 with lambda = u + t/3
  const double p = s - t * t / 3.0;
  const double q2 = -2.0 * t * t * t / 27.0 + s * t / 3.0 - d;
  double scale = std::max({1.0, std::abs(t), std::sqrt(std::abs(s)),
                           std::cbrt(std::abs(d))});
  double disc = -4.0 * p * p * p - 27.0 * q2 * q2;
  if (disc < -disc_tol * std::pow(scale, 6))
    throw CheckFailure("characteristic cubic has non-real roots");
  std::array<double, 3> roots;
  if (std::abs(p) < 1e-14 * scale * scale) {
    double u = std::cbrt(-q2);
    roots = {u, u, u};
  } else {
    double m = 2.0 * std::sqrt(std::max(-p / 3.0, 0.0));
    double arg = std::clamp(3.0 * q2 / (p * m), -1.0, 1.0);
    double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots[k] = m * std::cos(theta - 2.0 * M_PI * k / 3.0);
  }
  for (double& r : roots) r += t / 3.0;
  std::sort(roots.begin(), roots.end());
  return roots;
}

int albert_rank(const AlbertElement& a, double tol) {
  auto ev = albert_eigenvalues(a);
  double scale = std::max({1.0, std::abs(ev[0]), std::abs(ev[2])});
  int r = 0;
  for (double v : ev)
    if (std::abs(v) > tol * scale) ++r;
  return r;
}

bool cone_member(const AlbertElement& a, double tol) {
  const double t = trace(a), s = sigma(a), d = det(a);
  double scale = std::max(1.0, fro_norm(a));
  // discriminant guard: the spectrum must be real
  albert_eigenvalues(a);
  return t >= -tol * scale && s >= -tol * scale * scale &&
         d >= -tol * scale * scale * scale;
}

bool is_idempotent(const AlbertElement& a, double tol) {
  return approx_eq(jordan(a, a), a, tol);
}

bool is_projective_point(const AlbertElement& a, double tol) {
  return is_idempotent(a, tol) &&
         std::abs(trace(a) - 1.0) <= tol;
}

AlbertElement chart_point(const Alg& x, const Alg& y) {
  if (x.field() != Field::O || y.field() != Field::O)
    throw std::invalid_argument("chart coordinates must be octonions");
  double s = 1.0 + x.norm2() + y.norm2();
  Alg zslot = (x * y.conj()) * (1.0 / s);
  return AlbertElement(x.norm2() / s, y.norm2() / s, 1.0 / s, y * (1.0 / s),
                       x * (1.0 / s), zslot);
}

AlbertElement freudenthal_cross(const AlbertElement& p,
                                const AlbertElement& q) {
  double tp = trace(p), tq = trace(q);
  AlbertElement pq = jordan(p, q);
  AlbertElement r = pq - q * (0.5 * tp) - p * (0.5 * tq) +
                    AlbertElement::identity() *
                        (0.5 * (tp * tq - trace(pq)));
  return r;
}

AlbertLine line_through(const AlbertElement& p, const AlbertElement& q) {
  AlbertElement r = freudenthal_cross(p, q);
  double t = trace(r);
  if (std::abs(t) <= 1e-10 * (1.0 + fro_norm(r)))
    throw CheckFailure("cross product degenerates; points coincide?");
  return AlbertLine{r * (1.0 / t)};
}

AlbertElement meet_of_lines(const AlbertLine& l1, const AlbertLine& l2) {
  AlbertElement r = freudenthal_cross(l1.r, l2.r);
  double t = trace(r);
  if (std::abs(t) <= 1e-10 * (1.0 + fro_norm(r)))
    throw CheckFailure("cross product degenerates; lines coincide?");
  return r * (1.0 / t);
}

bool incident(const AlbertElement& p, const AlbertLine& l, double tol) {
  return std::abs(inner(p, l.r)) <= tol * (1.0 + fro_norm(p));
}

bool in_face(const AlbertElement& a, const AlbertElement& e, double tol) {
  if (!cone_member(a, tol) || !is_idempotent(e, 1e-7)) return false;
  for (double lambda : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    double scaled = lambda / std::max(1.0, fro_norm(a));
    if (cone_member(e - a * scaled, tol)) return true;
  }
  return false;
}

AlbertElement permuted(const AlbertElement& a, const std::array<int, 3>& perm) {
  Herm h(Field::O, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) h.set(i, j, a.herm().at(perm[i], perm[j]));
  return AlbertElement::from_herm(h);
}

AlbertElement rand_albert(Rng& rng) {
  auto ro = [&] {
    Alg v(Field::O);
    for (int i = 0; i < 8; ++i) v[i] = rng.normal();
    return v;
  };
  return AlbertElement(rng.normal(), rng.normal(), rng.normal(), ro(), ro(),
                       ro());
}

AlbertElement rand_albert_psd(Rng& rng) {
  AlbertElement a = rand_albert(rng);
  return jordan(a, a);
}

nlohmann::json to_json(const AlbertElement& a) {
  auto oct = [](const Alg& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < 8; ++i) arr.push_back(v[i]);
    return arr;
  };
  return nlohmann::json{{"diag", {a.diag(0), a.diag(1), a.diag(2)}},
                        {"x", oct(a.x())},
                        {"y", oct(a.y())},
                        {"z", oct(a.z())}};
}

AlbertElement albert_from_json(const nlohmann::json& j) {
  auto oct = [](const nlohmann::json& arr) {
    Alg v(Field::O);
    for (int i = 0; i < 8; ++i) v[i] = arr.at(i).get<double>();
    return v;
  };
  const auto& d = j.at("diag");
  return AlbertElement(d.at(0).get<double>(), d.at(1).get<double>(),
                       d.at(2).get<double>(), oct(j.at("x")), oct(j.at("y")),
                       oct(j.at("z")));
}

}  // namespace conelat
