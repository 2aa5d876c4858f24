#include "conelat/cone.hpp"

#include <Eigen/Dense>

namespace conelat {

namespace {

void check_same(const Face& f, const Face& g) {
  if (f.field != g.field || f.n != g.n)
    throw std::invalid_argument("face ambient mismatch");
}

Eigen::MatrixXcd realified_inv_sqrt(const Herm& x) {
  Eigen::MatrixXcd cx = realify(x);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(cx);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed");
  const auto& ev = es.eigenvalues();
  double top = ev(ev.size() - 1);
  if (ev(0) <= 1e-13 * (1.0 + std::abs(top)))
    throw CheckFailure("matrix not positive definite");
  Eigen::VectorXd inv_sqrt = ev.cwiseSqrt().cwiseInverse();
  return es.eigenvectors() * inv_sqrt.asDiagonal() *
         es.eigenvectors().adjoint();
}

// chord of the psd cone through x (pd) along direction d:
// x + t d psd for t in [lo, hi], lo <= 0 <= hi (possibly infinite -> capped)
std::pair<double, double> pd_chord(const Herm& x, const Herm& d, double cap) {
  Eigen::MatrixXcd w = realified_inv_sqrt(x);
  Eigen::MatrixXcd s = w * realify(d) * w;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s, Eigen::EigenvaluesOnly);
  double lmin = es.eigenvalues()(0);
  double lmax = es.eigenvalues()(es.eigenvalues().size() - 1);
  double hi = lmin < -1e-14 ? -1.0 / lmin : cap;
  double lo = lmax > 1e-14 ? -1.0 / lmax : -cap;
  return {lo, hi};
}

}  // namespace

Face face_of(const Herm& a, double psd_tol) {
  if (!is_psd(a, psd_tol))
    throw std::invalid_argument("face_of requires a psd matrix");
  return Face{a.field(), a.n(), range_of(a)};
}

Face face_join(const Face& f, const Face& g) {
  check_same(f, g);
  return Face{f.field, f.n, subspace_sum(f.range, g.range)};
}

Face face_meet(const Face& f, const Face& g) {
  check_same(f, g);
  return Face{f.field, f.n, subspace_intersect(f.range, g.range)};
}

bool face_leq(const Face& f, const Face& g, double tol) {
  check_same(f, g);
  return subspace_leq(f.range, g.range, tol);
}

bool face_eq(const Face& f, const Face& g, double tol) {
  check_same(f, g);
  return subspace_eq(f.range, g.range, tol);
}

bool in_face(const Herm& a, const Face& f, double tol) {
  if (!is_psd(a, tol)) return false;
  Herm p = projector(f.range);
  Herm pap = Herm::hermitize(p.mat() * (a.mat() * p.mat()));
  return fro_norm(pap - a) <= tol * (1.0 + fro_norm(a));
}

bool SlicedBody::is_compact(double cutoff) const {
  return is_psd(slice, 1e-12) && rank_of(slice, cutoff) == n;
}

bool SlicedBody::contains(const Herm& a, double tol) const {
  if (a.field() != field || a.n() != n) return false;
  if (!is_psd(a, tol)) return false;
  double v = inner(slice, a);
  return std::abs(v - 1.0) <= tol * (1.0 + std::abs(v));
}

std::vector<Herm> herm_basis(Field f, int k) {
  std::vector<Herm> out;
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < k; ++i) {
    Herm e(f, k);
    e.set(i, i, Alg::one(f));
    out.push_back(e);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = 0; l < field_dim(f); ++l) {
        Herm e(f, k);
        e.set(i, j, Alg::unit(f, l) * s);
        out.push_back(e);
      }
  return out;
}

std::vector<double> herm_coords(const Herm& a) {
  std::vector<Herm> basis = herm_basis(a.field(), a.n());
  std::vector<double> c(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) c[i] = inner(basis[i], a);
  return c;
}

Herm herm_from_coords(Field f, int k, const std::vector<double>& c) {
  std::vector<Herm> basis = herm_basis(f, k);
  if (c.size() != basis.size())
    throw std::invalid_argument("coordinate count mismatch");
  Herm a(f, k);
  for (size_t i = 0; i < basis.size(); ++i) a = a + basis[i] * c[i];
  return a;
}

namespace {

Herm pd_inverse(const Herm& x) {
  Eigen::MatrixXcd w = realified_inv_sqrt(x);
  Eigen::MatrixXcd inv = w * w;
  return Herm::hermitize(from_realified(x.field(), inv, 1e-6));
}

// hit-and-run average over {X psd : <Mp, X> = 1} inside Herm_k
Herm mc_slice_barycenter(const Herm& mp, int samples, std::uint64_t seed) {
  const Field f = mp.field();
  const int k = mp.n();
  const int dim = herm_dim(f, k);
  Herm x = pd_inverse(mp);
  x = x * (1.0 / inner(mp, x));
  if (dim == 1) return x;  // the slice is a single point

  std::vector<Herm> basis = herm_basis(f, k);
  const double mnorm2 = inner(mp, mp);
  Rng rng(seed);
  Herm acc(f, k);
  int burn = samples / 5 + 50;
  for (int it = 0; it < burn + samples; ++it) {
    Herm d(f, k);
    for (const Herm& b : basis) d = d + b * rng.normal();
    d = d - mp * (inner(mp, d) / mnorm2);
    double dn = fro_norm(d);
    if (dn < 1e-12) continue;
    d = d * (1.0 / dn);
    auto [lo, hi] = pd_chord(x, d, 1e6);
    double t = lo + (hi - lo) * rng.uniform01();
    x = Herm::hermitize(x.mat() + d.mat() * t);
    if (it >= burn) acc = acc + x;
  }
  acc = acc * (1.0 / samples);
  // re-center onto the slice (guards against drift)
  return acc * (1.0 / inner(mp, acc));
}

}  // namespace

Herm face_barycenter(const Face& f, const SlicedBody& body, int mc_samples,
                     std::uint64_t seed) {
  if (f.field != body.field || f.n != body.n)
    throw std::invalid_argument("face/body mismatch");
  const int k = f.rank();
  if (k == 0)
    throw CheckFailure("apex face does not meet the slice");
  if (body.is_trace_slice()) {
    Herm p = projector(f.range);
    return p * (1.0 / static_cast<double>(k));
  }
  const AlgMat& b = f.range.basis;
  Herm mp = compress(body.slice, b);
  std::vector<double> ev = eigenvalues_realified(mp);
  if (ev.front() <= 1e-10 * (1.0 + std::abs(ev.back())))
    throw CheckFailure("body is unbounded on this face; no barycenter");
  Herm xbar = mc_slice_barycenter(mp, mc_samples, seed);
  return Herm::hermitize(b * (xbar.mat() * b.adjoint()));
}

RadialDecomposition radial_decompose(const Herm& a, const SlicedBody& body,
                                     int mc_samples, std::uint64_t seed) {
  if (!body.contains(a, 1e-7))
    throw std::invalid_argument("radial_decompose: point not in body");
  Face f = face_of(a);
  Herm b = face_barycenter(f, body, mc_samples, seed);

  // work in face coordinates, where b is positive definite and the exit
  // parameter comes from an exact eigenvalue chord (no bisection noise)
  const AlgMat& basis = f.range.basis;
  Herm ac = compress(a, basis), bc = compress(b, basis);
  Herm dirc = ac - bc;
  if (fro_norm(dirc) <= 1e-9 * (1.0 + fro_norm(ac)))
    return RadialDecomposition{b, a, 0.0};
  auto [lo, hi] = pd_chord(bc, dirc, 1e12);
  (void)lo;
  if (hi >= 1e12)
    throw CheckFailure("radial direction never exits the cone");
  double tstar = std::max(hi, 1.0);
  Herm pc = Herm::hermitize(bc.mat() + dirc.mat() * tstar);
  Herm p = Herm::hermitize(basis * (pc.mat() * basis.adjoint()));
  return RadialDecomposition{b, p, std::min(1.0 / tstar, 1.0)};
}

namespace {

Herm normalize_to_slice(const Herm& a, const SlicedBody& body) {
  double v = inner(body.slice, a);
  if (v <= 1e-12) throw CheckFailure("point does not scale onto the slice");
  return a * (1.0 / v);
}

Face image_face(const std::function<Herm(const Herm&)>& vmap,
                const SlicedBody& body_a, const Face& f, Rng& rng) {
  const AlgMat& b = f.range.basis;
  const int k = f.rank();
  Face img = Face::apex(body_a.field, body_a.n);
  auto push = [&](const AlgMat& v) {
    Herm r1 = Herm::hermitize(v * v.adjoint());
    Herm x = normalize_to_slice(r1, body_a);
    Herm y = vmap(x);
    img = face_join(img, face_of(y, 1e-7));
  };
  for (int j = 0; j < k; ++j) push(b.col(j));
  for (int extra = 0; extra < k + 2; ++extra) {
    AlgMat coef = rand_mat(rng, body_a.field, k, 1);
    push(b * coef);
  }
  return img;
}

Herm radial_extend_rec(const std::function<Herm(const Herm&)>& vmap,
                       const SlicedBody& body_a, const SlicedBody& body_b,
                       const Herm& a, int mc_samples, Rng& rng, int depth) {
  if (depth > body_a.n + 2)
    throw CheckFailure("radial extension recursion exceeded rank depth");
  Face f = face_of(a, 1e-7);
  if (f.rank() <= 1) return vmap(a);
  RadialDecomposition rd =
      radial_decompose(a, body_a, mc_samples, rng.raw());
  Face img = image_face(vmap, body_a, f, rng);
  Herm bp = face_barycenter(img, body_b, mc_samples, rng.raw());
  if (rd.lambda <= 1e-9) return bp;
  Herm pp = radial_extend_rec(vmap, body_a, body_b, rd.p, mc_samples, rng,
                              depth + 1);
  return bp * (1.0 - rd.lambda) + pp * rd.lambda;
}

}  // namespace

Herm radial_extend(const std::function<Herm(const Herm&)>& vmap,
                   const SlicedBody& body_a, const SlicedBody& body_b,
                   const Herm& a, int mc_samples, std::uint64_t seed) {
  Rng rng(seed);
  return radial_extend_rec(vmap, body_a, body_b, a, mc_samples, rng, 0);
}

double support_value(const Face& f, const SlicedBody& body, const Herm& d) {
  if (f.rank() == 0)
    throw CheckFailure("apex face does not meet the slice");
  const AlgMat& b = f.range.basis;
  Herm dc = compress(d, b);
  Herm mc = compress(body.slice, b);
  Eigen::MatrixXcd w;
  try {
    w = realified_inv_sqrt(mc);
  } catch (const CheckFailure&) {
    throw CheckFailure("body is unbounded on this face; support undefined");
  }
  Eigen::MatrixXcd s = w * realify(dc) * w;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(es.eigenvalues().size() - 1);
}

double hausdorff_distance(const Face& f, const Face& g, const SlicedBody& body,
                          int n_dirs, Rng& rng) {
  if (f.field != g.field || f.n != g.n)
    throw std::invalid_argument("face ambient mismatch");
  double best = 0.0;
  for (int i = 0; i < n_dirs; ++i) {
    Herm d = rand_herm(rng, body.field, body.n);
    double dn = fro_norm(d);
    if (dn < 1e-12) continue;
    d = d * (1.0 / dn);
    best = std::max(best,
                    std::abs(support_value(f, body, d) -
                             support_value(g, body, d)));
  }
  return best;
}

Herm extreme_point_on(const Face& f, const SlicedBody& body, Rng& rng) {
  if (f.rank() == 0) throw CheckFailure("apex face has no slice points");
  AlgMat coef = rand_mat(rng, body.field, f.rank(), 1);
  AlgMat v = f.range.basis * coef;
  Herm r1 = Herm::hermitize(v * v.adjoint());
  return normalize_to_slice(r1, body);
}

Herm random_point_on(const Face& f, const SlicedBody& body, Rng& rng) {
  const int k = f.rank();
  if (k == 0) throw CheckFailure("apex face has no slice points");
  AlgMat g = rand_mat(rng, body.field, k, k + 1);
  Herm core = Herm::hermitize(g * g.adjoint());
  AlgMat lifted = f.range.basis * (core.mat() * f.range.basis.adjoint());
  return normalize_to_slice(Herm::hermitize(lifted), body);
}

}  // namespace conelat
