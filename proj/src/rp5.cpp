#include "conelat/rp5.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "conelat/rng.hpp"

namespace conelat {

namespace {

Poly pv(int v) { return Poly::var(v); }
Poly pc(long long n) { return Poly::constant(Rational(n)); }

Poly shifted(const Poly& p, int var, int k) {
  Poly r;
  for (const auto& [m, c] : p.terms()) {
    Mono m2 = m;
    m2[var] += k;
    r.add_term(m2, c);
  }
  return r;
}

// Continued-fraction rationalization of a floating point value.
std::optional<Rational> rationalize(double x, double tol = 1e-9,
                                    double max_den = 1e8) {
  if (!std::isfinite(x)) return std::nullopt;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (std::abs(fl) > 1e15) break;
    long long ai = (long long)fl;
    double p2d = (double)ai * p1 + p0, q2d = (double)ai * q1 + q0;
    if (std::abs(p2d) > 1e15 || q2d > max_den) break;
    long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (q1 > 0 &&
        std::abs((double)p1 / (double)q1 - x) <= tol * (1 + std::abs(x)))
      return Rational(p1, q1);
    double frac = v - fl;
    if (frac < 1e-14) break;
    v = 1.0 / frac;
  }
  return std::nullopt;
}

RatVec rvec(std::initializer_list<long long> v) {
  RatVec out;
  for (long long x : v) out.push_back(Rational(x));
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatMat dirs_matrix(const RatFlat& fl, const RatFlat* other = nullptr) {
  int k1 = fl.dim(), k2 = other ? other->dim() : 0;
  RatMat m((int)fl.point.size(), k1 + k2);
  for (int j = 0; j < k1; ++j)
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = fl.dirs[j][i];
  for (int j = 0; j < k2; ++j)
    for (int i = 0; i < m.rows; ++i) m.at(i, k1 + j) = other->dirs[j][i];
  return m;
}

Eigen::MatrixXd rat_to_eigen(const RatMat& m) {
  Eigen::MatrixXd out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = rat_to_double(m.at(i, j));
  return out;
}

using Vec6 = Eigen::Matrix<double, 6, 1>;

Vec6 sym6(const Herm& a) {
  Vec6 c;
  c << a.at(0, 0).re(), a.at(1, 1).re(), a.at(2, 2).re(), a.at(0, 1).re(),
      a.at(0, 2).re(), a.at(1, 2).re();
  return c;
}

Eigen::Matrix3d sym_mat3(const Vec6& c) {
  Eigen::Matrix3d m;
  m << c[0], c[3], c[4], c[3], c[1], c[5], c[4], c[5], c[2];
  return m;
}

Herm herm_from_mat3(const Eigen::Matrix3d& m) {
  Herm h = Herm::identity(Field::R, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      h.set(i, j, Alg::scalar(Field::R, 0.5 * (m(i, j) + m(j, i))));
  return h;
}

Eigen::VectorXd hom(const Eigen::VectorXd& x) {
  Eigen::VectorXd h(x.size() + 1);
  h.head(x.size()) = x;
  h[x.size()] = 1.0;
  return h;
}

// Orthonormalized flat through q0 and further points.
FlatD flat_through(const std::vector<Eigen::VectorXd>& pts) {
  Eigen::MatrixXd d(pts[0].size(), pts.size() - 1);
  for (size_t j = 1; j < pts.size(); ++j) d.col(j - 1) = pts[j] - pts[0];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      d, Eigen::ComputeThinU | Eigen::ComputeThinV);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > 1e-9 * svd.singularValues()[0]) ++r;
  FlatD fl;
  fl.base = pts[0];
  fl.dirs = svd.matrixU().leftCols(r);
  return fl;
}

}  // namespace

Poly det3(const PolyMat3& m) {
  Poly d;
  for (int j = 0; j < 3; ++j) {
    int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
    d = d + m[0][j] * (m[1][j1] * m[2][j2] - m[1][j2] * m[2][j1]);
  }
  return d;
}

PolyMat3 condition_matrix(int which) {
  Poly a = pv(VA), b = pv(VB), c = pv(VC), d = pv(VD), e = pv(VE), f = pv(VF);
  Poly one = pc(1), two = pc(2);
  if (which == 4)
    return {{{a, Poly{}, e},
             {Poly{}, d, e},
             {b - one, c - one, two * e + f - one}}};
  if (which == 5)
    return {{{b, Poly{}, e},
             {Poly{}, c, e},
             {a - one, d - one, two * e + f - one}}};
  if (which == 6)
    return {{{b, Poly{}, e - f},
             {Poly{}, d, e - f},
             {a - one, c - one, two * e - f - one}}};
  throw std::invalid_argument("condition_matrix: which must be 4, 5 or 6");
}

Poly det_condition(int which) { return det3(condition_matrix(which)); }

PolyMat3 combined_matrix() {
  PolyMat3 m;
  for (int i = 0; i < 3; ++i) {
    Poly d = det_condition(i + 4);
    m[i][0] = d.coeff_in(VE, 1).substituted(VF, 0);
    m[i][1] = d.coeff_in(VF, 1).substituted(VE, 0);
    m[i][2] = d.substituted(VE, 0).substituted(VF, 0);
  }
  return m;
}

PolyMat3 printed_combined_matrix() {
  Poly a = pv(VA), b = pv(VB), c = pv(VC), d = pv(VD);
  Poly ac = a * c, ad = a * d, bc = b * c, bd = b * d;
  PolyMat3 m;
  m[0] = {-ac + pc(2) * ad - bd + a + d, ad, -ad};
  m[1] = {-ac + pc(2) * bc - bd + b + c, bc, -bc};
  m[2] = {-ad - bc + pc(2) * bd + b + d, ad + bc - bd - b - d, -bd};
  return m;
}

std::vector<std::string> combined_matrix_diff() {
  PolyMat3 derived = combined_matrix(), printed = printed_combined_matrix();
  std::vector<std::string> diff;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(derived[i][j] == printed[i][j])) {
        std::ostringstream os;
        os << "entry (" << i + 1 << "," << j + 1
           << "): derived = " << derived[i][j].str()
           << ", printed = " << printed[i][j].str();
        diff.push_back(os.str());
      }
  return diff;
}

Poly combined_condition() { return det3(combined_matrix()); }

std::optional<Poly> poly_divide_linear(const Poly& p, const Poly& ell,
                                       int var) {
  if (ell.degree_in(var) != 1)
    throw std::invalid_argument("poly_divide_linear: ell not linear in var");
  Poly lead = ell.coeff_in(var, 1);
  if (lead.total_degree() != 0)
    throw std::invalid_argument(
        "poly_divide_linear: leading coefficient must be constant");
  Rational alpha = lead.terms().begin()->second;
  Poly q, r = p;
  while (!r.is_zero()) {
    int k = r.degree_in(var);
    if (k == 0) break;
    Poly t = shifted(r.coeff_in(var, k), var, k - 1) * (Rational(1) / alpha);
    q = q + t;
    r = r - t * ell;
  }
  if (!r.is_zero()) return std::nullopt;
  return q;
}

namespace {

// Clear denominators and content; make the graded-lex leading coefficient
// positive.
Poly normalize_linear(const Poly& p) {
  Int den = 1;
  for (const auto& [m, c] : p.terms())
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  Int num = 0;
  for (const auto& [m, c] : p.terms()) {
    Int t = boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c));
    num = boost::multiprecision::gcd(num, t);
  }
  if (num == 0) return p;
  Poly out = p * Rational(den, num);
  // leading sign: largest monomial in graded lex
  const auto& ts = out.terms();
  auto tdeg = [](const Mono& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
  };
  auto best = ts.begin();
  for (auto it = ts.begin(); it != ts.end(); ++it) {
    int di = tdeg(it->first), db = tdeg(best->first);
    if (di > db || (di == db && it->first > best->first)) best = it;
  }
  if (best->second < 0) out = -out;
  return out;
}

std::vector<double> univar_roots(const Poly& g, int var) {
  if (g.degree_in(var) > 3)
    throw std::invalid_argument("univar_roots: degree above cubic");
  double c[4] = {0, 0, 0, 0};
  for (int k = 0; k <= 3; ++k) {
    Poly ck = g.coeff_in(var, k);
    if (ck.is_zero()) continue;
    if (ck.total_degree() != 0) throw std::invalid_argument("not univariate");
    c[k] = rat_to_double(ck.terms().begin()->second);
  }
  return real_roots_cubic(c[3], c[2], c[1], c[0]);
}

std::optional<std::pair<Poly, Poly>> try_linear_factor(const Poly& q,
                                                       const Poly& ell,
                                                       int var) {
  Poly cand = normalize_linear(ell);
  auto quot = poly_divide_linear(q, cand, var);
  if (!quot) return std::nullopt;
  return std::make_pair(cand, *quot);
}

}  // namespace

std::pair<Poly, Poly> factor_condition(const Rational& c, const Rational& d) {
  Poly q = combined_condition().substituted(VC, c).substituted(VD, d);
  if (q.is_zero())
    throw CheckFailure("factor_condition: condition vanishes identically");
  std::ostringstream witness;
  witness << " at (c,d)=(" << rat_to_string(c) << "," << rat_to_string(d)
          << ")";

  // roots in a along the sample lines b = 0..4
  if (q.degree_in(VA) >= 1) {
    std::vector<std::vector<double>> roots;
    for (int beta = 0; beta <= 4; ++beta)
      roots.push_back(univar_roots(q.substituted(VB, Rational(beta)), VA));
    auto near_root = [&](int beta, double x) {
      for (double r : roots[beta])
        if (std::abs(r - x) <= 1e-6 * (1 + std::abs(x))) return true;
      return false;
    };
    for (double r0 : roots[0])
      for (double r1 : roots[1]) {
        double s = r1 - r0;
        bool ok = true;
        for (int beta = 2; beta <= 4 && ok; ++beta)
          ok = near_root(beta, r0 + s * beta);
        if (!ok) continue;
        // double roots of the slice cubics carry sqrt(eps)-scale error, so
        // rationalize loosely; try_linear_factor verifies by exact division
        auto rr0 = rationalize(r0, 1e-6, 1e6), rs = rationalize(s, 1e-6, 1e6);
        if (!rr0 || !rs) continue;
        // a - rr0 - rs * b
        Poly ell = pv(VA) - Poly::constant(*rr0) - Poly::constant(*rs) * pv(VB);
        if (auto res = try_linear_factor(q, ell, VA)) return *res;
      }
  }
  // vertical factor b - gamma: q(a, gamma) == 0 identically
  if (q.degree_in(VB) >= 1) {
    Poly g;
    for (long long ra = 0; ra <= 3 && g.is_zero(); ++ra)
      g = q.substituted(VA, Rational(ra));
    for (double root : g.is_zero() ? std::vector<double>{}
                                   : univar_roots(g, VB)) {
      auto rg = rationalize(root, 1e-6, 1e6);
      if (!rg) continue;
      if (!q.substituted(VB, *rg).is_zero()) continue;
      Poly ell = pv(VB) - Poly::constant(*rg);
      if (auto res = try_linear_factor(q, ell, VB)) return *res;
    }
  }
  // constant-in-a factor: a - gamma (slope 0 already tried above); give up
  throw CheckFailure("factor_condition: no rational linear factor found" +
                     witness.str());
}

// ---------------------------------------------------------------------------

RatFlat section_plane(const std::array<Rational, kNumVars>& p) {
  RatVec u1 = {p[VA], p[VB], 0, 0, 0};
  RatVec u2 = {0, 0, p[VC], p[VD], 0};
  RatVec u3 = {p[VE], p[VE], p[VE], p[VE], p[VF]};
  RatFlat fl{u1, {sub(u2, u1), sub(u3, u1)}};
  if (rank_of(dirs_matrix(fl)) != 2)
    throw std::domain_error("section_plane: degenerate generators");
  return fl;
}

std::vector<RatVec> seven_points() {
  std::vector<RatVec> pts;
  pts.push_back(rvec({0, 0, 0, 0, 0}));
  for (int i = 0; i < 5; ++i) {
    RatVec e(5, Rational(0));
    e[i] = 1;
    pts.push_back(e);
  }
  pts.push_back(rvec({1, 1, 1, 1, 1}));
  return pts;
}

std::vector<std::pair<int, Rational>> family_constraints(int k) {
  switch (k) {
    case 0: return {{VA, 0}, {VB, 0}};
    case 1: return {{VA, 1}, {VB, 0}};
    case 2: return {{VA, 0}, {VB, 1}};
    case 3: return {{VC, 1}, {VD, 0}};
    case 4: return {{VC, 0}, {VD, 1}};
    case 5: return {{VE, 0}, {VF, 1}};
    case 6: return {{VE, 1}, {VF, 1}};
    default: throw std::invalid_argument("family_constraints: k out of range");
  }
}

bool flat_contains(const RatFlat& fl, const RatVec& pt) {
  return solve(dirs_matrix(fl), sub(pt, fl.point)).has_value();
}

bool flats_meet(const RatFlat& f1, const RatFlat& f2) {
  return solve(dirs_matrix(f1, &f2), sub(f2.point, f1.point)).has_value();
}

namespace {

// The spans of the parametrization's three base families: u1 sweeps
// span(e1,e2), u2 sweeps span(e3,e4), u3 sweeps span(e5, (1,1,1,1,1)).
std::vector<RatFlat> parametrization_spans() {
  RatVec zero(5, Rational(0));
  RatVec e1 = rvec({1, 0, 0, 0, 0}), e2 = rvec({0, 1, 0, 0, 0});
  RatVec e3 = rvec({0, 0, 1, 0, 0}), e4 = rvec({0, 0, 0, 1, 0});
  RatVec e5 = rvec({0, 0, 0, 0, 1}), ones = rvec({1, 1, 1, 1, 1});
  return {RatFlat{zero, {e1, e2}}, RatFlat{zero, {e3, e4}},
          RatFlat{zero, {e5, ones}}};
}

Poly apply_family(const Poly& p, int k) {
  Poly r = p;
  for (const auto& [var, val] : family_constraints(k))
    r = r.substituted(var, val);
  return r;
}

}  // namespace

std::vector<std::array<int, 3>> incidence_triples() {
  std::vector<std::array<int, 3>> out;
  auto pts = seven_points();
  for (const RatFlat& s : parametrization_spans()) {
    std::vector<int> in;
    for (int k = 0; k < 7; ++k)
      if (flat_contains(s, pts[k])) in.push_back(k);
    if (in.size() != 3)
      throw CheckFailure("incidence_triples: base span does not contain "
                         "exactly three points");
    out.push_back({in[0], in[1], in[2]});
  }
  for (int which = 4; which <= 6; ++which) {
    Poly d = det_condition(which);
    std::vector<int> in;
    for (int k = 0; k < 7; ++k)
      if (apply_family(d, k).is_zero()) in.push_back(k);
    if (in.size() != 3)
      throw CheckFailure(
          "incidence_triples: determinant does not vanish on exactly three "
          "families");
    out.push_back({in[0], in[1], in[2]});
  }
  return out;
}

std::vector<std::array<int, 3>> incidence_reference() {
  return {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {2, 3, 5}, {1, 4, 5}, {1, 3, 6}};
}

std::vector<RatFlat> base_spans() {
  auto pts = seven_points();
  std::vector<RatFlat> out;
  for (const auto& t : incidence_triples()) {
    RatFlat fl{pts[t[0]],
               {sub(pts[t[1]], pts[t[0]]), sub(pts[t[2]], pts[t[0]])}};
    if (rank_of(dirs_matrix(fl)) != 2)
      throw CheckFailure("base_spans: degenerate span");
    out.push_back(fl);
  }
  return out;
}

std::string incidence_transcript() {
  std::ostringstream os;
  os << "Incidence derivation for the seven-point configuration in R^5\n";
  os << "==============================================================\n\n";
  os << "Points: p0=(0,0,0,0,0), p1=e1, p2=e2, p3=e3, p4=e4, p5=e5, "
        "p6=(1,1,1,1,1)\n";
  os << "Plane: r*(a,b,0,0,0) + s*(0,0,c,d,0) + t*(e,e,e,e,f), r+s+t=1\n\n";
  os << "Families of planes through each point (parameter substitutions):\n";
  const char* vn[6] = {"a", "b", "c", "d", "e", "f"};
  for (int k = 0; k < 7; ++k) {
    os << "  p" << k << ": ";
    bool first = true;
    for (const auto& [var, val] : family_constraints(k)) {
      if (!first) os << ", ";
      first = false;
      os << vn[var] << "=" << rat_to_string(val);
    }
    os << "\n";
  }
  os << "\nDeterminant conditions (plane meets S4/S5/S6):\n";
  for (int which = 4; which <= 6; ++which)
    os << "  det" << which << " = " << det_condition(which).str() << "\n";
  os << "\nVanishing of det_i under each family substitution (1 = vanishes "
        "identically):\n";
  os << "        p0 p1 p2 p3 p4 p5 p6\n";
  for (int which = 4; which <= 6; ++which) {
    os << "  det" << which << "  ";
    for (int k = 0; k < 7; ++k)
      os << " " << (apply_family(det_condition(which), k).is_zero() ? 1 : 0)
         << " ";
    os << "\n";
  }
  os << "\nMembership of p_k in the parametrization spans S1..S3:\n";
  os << "        p0 p1 p2 p3 p4 p5 p6\n";
  auto pts = seven_points();
  auto psp = parametrization_spans();
  for (int i = 0; i < 3; ++i) {
    os << "  S" << i + 1 << "    ";
    for (int k = 0; k < 7; ++k)
      os << " " << (flat_contains(psp[i], pts[k]) ? 1 : 0) << " ";
    os << "\n";
  }
  os << "\nDerived incidence triples:\n";
  auto triples = incidence_triples();
  for (int i = 0; i < 6; ++i)
    os << "  S" << i + 1 << " = {" << triples[i][0] << ", " << triples[i][1]
       << ", " << triples[i][2] << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<RatVec> canonical_vectors() {
  return {rvec({1, 0, 0}), rvec({0, 1, 0}), rvec({1, 1, 0}),
          rvec({0, 0, 1}), rvec({1, 0, 1}), rvec({1, 1, 1}),
          rvec({0, 1, 1})};
}

std::vector<RatVec> canonical_projector_coords() {
  std::vector<RatVec> out;
  for (const RatVec& v : canonical_vectors()) {
    Rational n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    RatVec c = {v[0] * v[0] / n2, v[1] * v[1] / n2, v[2] * v[2] / n2,
                v[0] * v[1] / n2, v[0] * v[2] / n2, v[1] * v[2] / n2};
    out.push_back(c);
  }
  return out;
}

HermQ sym_to_herm(const RatVec& c) {
  HermQ h = HermQ::identity(Field::R, 3);
  h.set(0, 0, AlgQ::scalar(Field::R, c[0]));
  h.set(1, 1, AlgQ::scalar(Field::R, c[1]));
  h.set(2, 2, AlgQ::scalar(Field::R, c[2]));
  h.set(0, 1, AlgQ::scalar(Field::R, c[3]));
  h.set(0, 2, AlgQ::scalar(Field::R, c[4]));
  h.set(1, 2, AlgQ::scalar(Field::R, c[5]));
  return h;
}

RatVec herm_to_sym(const HermQ& h) {
  return {h.at(0, 0).re(), h.at(1, 1).re(), h.at(2, 2).re(),
          h.at(0, 1).re(), h.at(0, 2).re(), h.at(1, 2).re()};
}

std::vector<Herm> canonical_projectors() {
  std::vector<Herm> out;
  for (const RatVec& c : canonical_projector_coords()) {
    Herm h = Herm::identity(Field::R, 3);
    h.set(0, 0, Alg::scalar(Field::R, rat_to_double(c[0])));
    h.set(1, 1, Alg::scalar(Field::R, rat_to_double(c[1])));
    h.set(2, 2, Alg::scalar(Field::R, rat_to_double(c[2])));
    h.set(0, 1, Alg::scalar(Field::R, rat_to_double(c[3])));
    h.set(0, 2, Alg::scalar(Field::R, rat_to_double(c[4])));
    h.set(1, 2, Alg::scalar(Field::R, rat_to_double(c[5])));
    out.push_back(h);
  }
  return out;
}

RatMat projective_frame_map(const std::vector<RatVec>& src,
                            const std::vector<RatVec>& dst) {
  if (src.size() != 7 || dst.size() != 7)
    throw std::invalid_argument("projective_frame_map: need seven points");
  const int n = 6;
  RatMat b(n, n), c(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      b.at(i, j) = src[j][i];
      c.at(i, j) = dst[j][i];
    }
  if (det(b) == 0 || det(c) == 0)
    throw CheckFailure("projective_frame_map: first six points degenerate");
  auto lambda = solve(b, src[6]);
  auto mu = solve(c, dst[6]);
  if (!lambda || !mu)
    throw CheckFailure("projective_frame_map: inconsistent frame");
  RatMat d(n, n);
  for (int i = 0; i < n; ++i) {
    if ((*lambda)[i] == 0 || (*mu)[i] == 0)
      throw CheckFailure("projective_frame_map: frame not in general position");
    d.at(i, i) = (*mu)[i] / (*lambda)[i];
  }
  return c * d * inverse(b);
}

RatMat canonical_normalization() {
  auto dst_pts = seven_points();
  std::vector<RatVec> dst;
  for (const RatVec& p : dst_pts) {
    RatVec h = p;
    h.push_back(Rational(1));
    dst.push_back(h);
  }
  return projective_frame_map(canonical_projector_coords(), dst);
}

// ---------------------------------------------------------------------------

double flat_distance(const FlatD& f1, const FlatD& f2) {
  int k1 = f1.dirs.cols(), k2 = f2.dirs.cols();
  Eigen::MatrixXd a(f1.base.size(), k1 + k2);
  a.leftCols(k1) = f1.dirs;
  a.rightCols(k2) = -f2.dirs;
  Eigen::VectorXd rhs = f2.base - f1.base;
  Eigen::VectorXd sol = a.colPivHouseholderQr().solve(rhs);
  return (a * sol - rhs).norm();
}

Eigen::VectorXd flat_intersection_point(const FlatD& f1, const FlatD& f2,
                                        double tol) {
  int k1 = f1.dirs.cols(), k2 = f2.dirs.cols();
  Eigen::MatrixXd a(f1.base.size(), k1 + k2);
  a.leftCols(k1) = f1.dirs;
  a.rightCols(k2) = -f2.dirs;
  Eigen::VectorXd rhs = f2.base - f1.base;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > 1e-9 * svd.singularValues()[0]) ++rank;
  if (rank < k1 + k2)
    throw CheckFailure("configB inconsistent: span intersection not a point");
  Eigen::VectorXd sol = svd.solve(rhs);
  if ((a * sol - rhs).norm() > tol * (1 + rhs.norm()))
    throw CheckFailure("configB inconsistent: spans do not meet");
  return f1.base + f1.dirs * sol.head(k1);
}

FlatD map_flat(const Eigen::MatrixXd& t6, const FlatD& fl) {
  const double offs[][2] = {{0, 0},  {1, 0},  {0, 1},          {1, 1},
                            {-1, 1}, {1, -1}, {0.37, 0.61},    {-0.5, 2},
                            {2, -0.25}, {0.11, -0.83}};
  std::vector<Eigen::VectorXd> pts;
  for (const auto& o : offs) {
    Eigen::VectorXd x = fl.base;
    for (int j = 0; j < fl.dirs.cols() && j < 2; ++j)
      x += o[j] * fl.dirs.col(j);
    Eigen::VectorXd q = t6 * hom(x);
    if (std::abs(q[5]) < 1e-9 * q.norm()) continue;
    pts.push_back(q.head(5) / q[5]);
  }
  if ((int)pts.size() < fl.dirs.cols() + 1)
    throw CheckFailure("map_flat: image points kept landing at infinity");
  return flat_through(pts);
}

// ---------------------------------------------------------------------------

R5Body R5Body::canonical() {
  R5Body b;
  b.h_ = rat_to_eigen(canonical_normalization());
  b.hinv_ = b.h_.inverse();
  b.cfg_.triples = incidence_triples();
  for (const Herm& p : canonical_projectors()) b.cfg_.pts.push_back(b.to_body(p));
  return b;
}

R5Body R5Body::transformed(const Eigen::MatrixXd& t6) const {
  R5Body b = *this;
  b.h_ = t6 * h_;
  b.hinv_ = b.h_.inverse();
  for (auto& p : b.cfg_.pts) {
    Eigen::VectorXd q = t6 * hom(p);
    if (std::abs(q[5]) < 1e-12 * q.norm())
      throw CheckFailure("transformed: configured point sent to infinity");
    p = q.head(5) / q[5];
  }
  return b;
}

Eigen::VectorXd R5Body::to_body(const Herm& a) const {
  if (a.field() != Field::R || a.n() != 3)
    throw std::invalid_argument("R5Body: slice elements are real 3x3");
  Vec6 c = sym6(a);
  Eigen::VectorXd q = h_ * c;
  if (std::abs(q[5]) < 1e-10 * q.norm())
    throw CheckFailure("to_body: point at infinity in this chart");
  return q.head(5) / q[5];
}

Herm R5Body::from_body(const Eigen::VectorXd& x) const {
  Eigen::VectorXd c = hinv_ * hom(x);
  double t = c[0] + c[1] + c[2];
  if (std::abs(t) < 1e-10 * c.norm())
    throw CheckFailure("from_body: pullback has vanishing trace");
  Vec6 cc = c.head<6>() / t;
  return herm_from_mat3(sym_mat3(cc));
}

bool R5Body::contains(const Eigen::VectorXd& x, double tol) const {
  Herm a = from_body(x);
  return is_psd(a, tol);
}

FlatD R5Body::face_flat(const Eigen::MatrixXd& w) const {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(w);
  Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(3, w.cols());
  Eigen::Vector3d w1 = q.col(0), w2 = q.col(1);
  const double ts[] = {0.0, 1.0, -1.0, 0.5, -0.5, 2.0, -2.0, 3.0, 1.0 / 3};
  std::vector<Eigen::VectorXd> pts;
  // t = +inf corresponds to w2 itself
  for (int attempt = 0; attempt < 10 && pts.size() < 3; ++attempt) {
    Eigen::Vector3d u;
    if (attempt == 0)
      u = w2;
    else
      u = (w1 + ts[attempt - 1] * w2).normalized();
    Herm a = herm_from_mat3(u * u.transpose());
    try {
      Eigen::VectorXd y = to_body(a);
      bool indep = true;
      if (pts.size() == 2) {
        Eigen::MatrixXd d(5, 2);
        d.col(0) = pts[1] - pts[0];
        d.col(1) = y - pts[0];
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
        indep = svd.singularValues()[1] > 1e-8 * svd.singularValues()[0];
      }
      if (indep) pts.push_back(y);
    } catch (const CheckFailure&) {
    }
  }
  if (pts.size() < 3)
    throw CheckFailure("face_flat: could not chart three face points");
  return flat_through(pts);
}

FlatD R5Body::span_through(const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y) const {
  Herm ax = from_body(x), ay = from_body(y);
  Eigen::Matrix3d m =
      sym_mat3(sym6(ax)) * sym_mat3(sym6(ax)).transpose() +
      sym_mat3(sym6(ay)) * sym_mat3(sym6(ay)).transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
  Eigen::MatrixXd w(3, 2);
  w.col(0) = es.eigenvectors().col(2);
  w.col(1) = es.eigenvectors().col(1);
  if (es.eigenvalues()[1] < 1e-10 * es.eigenvalues()[2])
    throw CheckFailure("span_through: points do not span a rank-two face");
  return face_flat(w);
}

FlatD R5Body::span_of_pair(int i, int j) const {
  return span_through(cfg_.pts[i], cfg_.pts[j]);
}

FlatD R5Body::random_face_span(Rng& rng) const {
  Eigen::MatrixXd w(3, 2);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i) w(i, j) = rng.normal();
  return face_flat(w);
}

double R5Body::face_span_residual(const FlatD& fl) const {
  std::vector<Eigen::Matrix3d> pulled;
  const double offs[][2] = {{0, 0},    {1, 0},     {0, 1},    {1, 1},
                            {-1, 1},   {1, -1},    {0.37, 0.61},
                            {-0.5, 2}, {2, -0.25}, {0.11, -0.83}};
  for (const auto& o : offs) {
    if (pulled.size() >= 4) break;
    Eigen::VectorXd x = fl.base + o[0] * fl.dirs.col(0) + o[1] * fl.dirs.col(1);
    try {
      pulled.push_back(sym_mat3(sym6(from_body(x))));
    } catch (const CheckFailure&) {
    }
  }
  if (pulled.size() < 3) return std::numeric_limits<double>::infinity();
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  for (const auto& a : pulled) m += a * a.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
  Eigen::MatrixXd w(3, 2);
  w.col(0) = es.eigenvectors().col(2);
  w.col(1) = es.eigenvectors().col(1);
  Eigen::Matrix3d pw = w * w.transpose();
  double resid = 0;
  for (const auto& a : pulled)
    resid = std::max(resid,
                     (a - pw * a * pw).norm() / (1 + a.norm()));
  return resid;
}

double R5Body::extreme_point_residual(const Eigen::VectorXd& x) const {
  Herm a = from_body(x);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(sym_mat3(sym6(a)));
  Eigen::Vector3d ev = es.eigenvalues();
  return std::max({std::abs(ev[2] - 1.0), std::abs(ev[1]), std::abs(ev[0])});
}

Eigen::VectorXd R5Body::random_extreme_point(Rng& rng) const {
  for (int attempt = 0; attempt < 32; ++attempt) {
    Eigen::Vector3d u;
    for (int i = 0; i < 3; ++i) u[i] = rng.normal();
    u.normalize();
    try {
      return to_body(herm_from_mat3(u * u.transpose()));
    } catch (const CheckFailure&) {
    }
  }
  throw CheckFailure("random_extreme_point: chart kept hitting infinity");
}

std::vector<Eigen::VectorXd> R5Body::face_boundary_samples(int i, int j,
                                                           int count,
                                                           double offset) const {
  Herm ai = from_body(cfg_.pts[i]), aj = from_body(cfg_.pts[j]);
  Eigen::Matrix3d m = sym_mat3(sym6(ai)) + sym_mat3(sym6(aj));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
  Eigen::Vector3d w1 = es.eigenvectors().col(2), w2 = es.eigenvectors().col(1);
  std::vector<Eigen::VectorXd> out;
  double step = M_PI / count;
  for (int k = 0; k < count; ++k) {
    double theta = offset + k * step;
    for (int shift = 0; shift < 8; ++shift) {
      Eigen::Vector3d u = std::cos(theta) * w1 + std::sin(theta) * w2;
      try {
        out.push_back(to_body(herm_from_mat3(u * u.transpose())));
        break;
      } catch (const CheckFailure&) {
        theta += 1e-4;
      }
    }
  }
  return out;
}

SevenPointConfig canonical_config() { return R5Body::canonical().config(); }

bool spans_check(const FlatD& fl, const R5Body& body, int n_samples,
                 uint64_t seed, double tol) {
  const auto& cfg = body.config();
  for (const auto& t : cfg.triples) {
    FlatD s = flat_through({cfg.pts[t[0]], cfg.pts[t[1]], cfg.pts[t[2]]});
    if (flat_distance(fl, s) > tol) return false;
  }
  Rng rng(seed);
  for (int k = 0; k < n_samples; ++k) {
    FlatD s = body.random_face_span(rng);
    if (flat_distance(fl, s) > tol) return false;
  }
  return true;
}

double face_conic_residual(const R5Body& body, int i, int j, int fit_samples,
                           int test_samples) {
  FlatD fl = body.span_of_pair(i, j);
  auto fit_pts = body.face_boundary_samples(i, j, fit_samples, 0.0);
  auto test_pts = body.face_boundary_samples(i, j, test_samples, 0.2391);
  auto coords2 = [&](const Eigen::VectorXd& x) {
    return Eigen::Vector2d(fl.dirs.col(0).dot(x - fl.base),
                           fl.dirs.col(1).dot(x - fl.base));
  };
  Eigen::MatrixXd design(fit_pts.size(), 6);
  for (size_t r = 0; r < fit_pts.size(); ++r) {
    Eigen::Vector2d xi = coords2(fit_pts[r]);
    design.row(r) << xi[0] * xi[0], xi[0] * xi[1], xi[1] * xi[1], xi[0], xi[1],
        1.0;
    design.row(r) /= design.row(r).norm();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinV);
  Eigen::VectorXd c = svd.matrixV().col(5);
  double resid = 0;
  for (const auto& p : test_pts) {
    Eigen::Vector2d xi = coords2(p);
    Eigen::VectorXd m(6);
    m << xi[0] * xi[0], xi[0] * xi[1], xi[1] * xi[1], xi[0], xi[1], 1.0;
    resid = std::max(resid, std::abs(c.dot(m)) / m.norm());
  }
  return resid;
}

ProjectiveMatch projective_equivalence(const R5Body& a, const R5Body& b,
                                       double tol) {
  const auto& pa = a.config().pts;
  const auto& pb = b.config().pts;
  const auto& triples = a.config().triples;
  // pairs of low points generating S4, S5, S6; apex 5 or 6
  std::array<std::pair<int, int>, 3> pair_of;
  std::array<int, 3> apex_of;
  for (int i = 3; i < 6; ++i) {
    std::vector<int> low, high;
    for (int v : triples[i]) (v <= 4 ? low : high).push_back(v);
    if (low.size() != 2 || high.size() != 1)
      throw CheckFailure("projective_equivalence: unexpected incidence table");
    pair_of[i - 3] = {low[0], low[1]};
    apex_of[i - 3] = high[0];
  }
  // the two faces through p5 and the one with apex 6
  std::vector<int> through5, through6;
  for (int i = 0; i < 3; ++i)
    (apex_of[i] == 5 ? through5 : through6).push_back(i);
  if (through5.size() != 2 || through6.size() != 1)
    throw CheckFailure("projective_equivalence: unexpected apex pattern");

  auto span_b = [&](int which) {
    auto [u, v] = pair_of[which];
    return b.span_through(pb[u], pb[v]);
  };
  FlatD s4p = span_b(through5[0]);
  FlatD s5p = span_b(through5[1]);
  Eigen::VectorXd p5p = flat_intersection_point(s4p, s5p, tol);

  FlatD s3p = b.span_through(pb[0], p5p);
  FlatD s6p = span_b(through6[0]);
  Eigen::VectorXd p6p = flat_intersection_point(s3p, s6p, tol);

  std::vector<Eigen::VectorXd> target = {pb[0], pb[1], pb[2], pb[3],
                                         pb[4], p5p,   p6p};
  // numeric frame map
  Eigen::MatrixXd bm(6, 6), cm(6, 6);
  for (int j = 0; j < 6; ++j) {
    bm.col(j) = hom(pa[j]);
    cm.col(j) = hom(target[j]);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lub(bm), luc(cm);
  if (!lub.isInvertible() || !luc.isInvertible())
    throw CheckFailure("projective_equivalence: frame degenerate");
  Eigen::VectorXd lambda = lub.solve(hom(pa[6]));
  Eigen::VectorXd mu = luc.solve(hom(target[6]));
  for (int i = 0; i < 6; ++i)
    if (std::abs(lambda[i]) < 1e-10 * lambda.norm() ||
        std::abs(mu[i]) < 1e-10 * mu.norm())
      throw CheckFailure("projective_equivalence: frame not in general "
                         "position");
  Eigen::MatrixXd t6 =
      cm * (mu.array() / lambda.array()).matrix().asDiagonal() * bm.inverse();

  double resid = 0;
  for (int k = 0; k < 7; ++k) {
    Eigen::VectorXd u = t6 * hom(pa[k]);
    Eigen::VectorXd v = hom(target[k]);
    u.normalize();
    v.normalize();
    resid = std::max(resid, std::min((u - v).norm(), (u + v).norm()));
  }
  return ProjectiveMatch{t6, resid};
}

}  // namespace conelat
