#include "conelat/sections.hpp"

#include <algorithm>
#include <stdexcept>

namespace conelat {

AlgMat random_column_in(Rng& rng, const Subspace& s) {
  if (s.dim() == 0) throw std::invalid_argument("zero subspace");
  AlgMat c = rand_unit_column(rng, s.field, s.dim());
  AlgMat v = s.basis * c;
  return v * (1.0 / fro_norm(v));
}

Herm slice_extreme_from(const SectionBody& sec, const AlgMat& v) {
  Herm p = Herm::hermitize(v * v.adjoint());
  double t = inner(sec.body.slice, p);
  double scale = fro_norm(p) * fro_norm(sec.body.slice);
  if (t <= 1e-10 * (1.0 + scale))
    throw std::invalid_argument("direction lies in ker M");
  return p * (1.0 / t);
}

SectionBody make_section(Field f, int n, const Herm& m, double psd_tol) {
  if (m.field() != f || m.n() != n)
    throw std::invalid_argument("functional shape mismatch");
  if (!is_psd(m, psd_tol))
    throw std::invalid_argument("functional is not psd");
  if (fro_norm(m) <= psd_tol)
    throw std::invalid_argument("functional is zero: slice is empty");
  SectionBody sec;
  sec.body = SlicedBody{f, n, m};
  sec.ker = kernel_of(m);
  sec.compact = sec.ker.dim() == 0;
  return sec;
}

Face recession_face(const SectionBody& sec) {
  return Face{sec.field(), sec.n(), sec.ker};
}

std::vector<Herm> recession_rays(const SectionBody& sec) {
  std::vector<Herm> rays;
  for (int j = 0; j < sec.ker.dim(); ++j) {
    AlgMat u = sec.ker.basis.col(j);
    Herm p = Herm::hermitize(u * u.adjoint());
    rays.push_back(p * (1.0 / p.trace()));
  }
  return rays;
}

Subspace face_recession(const SectionBody& sec, const Face& f) {
  return subspace_intersect(f.range, sec.ker);
}

bool face_is_compact(const SectionBody& sec, const Face& f) {
  return face_recession(sec, f).dim() == 0;
}

bool face_meets_body(const SectionBody& sec, const Face& f) {
  if (f.rank() == 0) return false;
  return !subspace_leq(f.range, sec.ker);
}

namespace {

Herm ray_projector(const AlgMat& u) {
  Herm p = Herm::hermitize(u * u.adjoint());
  return p * (1.0 / p.trace());
}

}  // namespace

bool unique_ray_check(const SectionBody& sec, const Face& f, int n_dirs,
                      Rng& rng, double tol) {
  Subspace r = face_recession(sec, f);
  if (r.dim() == 0)
    throw std::invalid_argument(
        "unique_ray_check: face is compact (not applicable)");
  const bool unique = r.dim() == 1;
  Herm first(sec.field(), sec.n());
  bool agree = true;
  for (int i = 0; i < std::max(n_dirs, 2); ++i) {
    Herm p = ray_projector(random_column_in(rng, r));
    if (i == 0)
      first = p;
    else if (fro_norm(p - first) > tol)
      agree = false;
  }
  if (agree != unique)
    throw CheckFailure(
        "unique_ray_check: sampled directions disagree with kernel dimension");
  return unique;
}

int shared_direction_check(const SectionBody& sec, const Face& a,
                           const Face& b) {
  Subspace w = subspace_intersect(a.range, b.range);
  return subspace_intersect(w, sec.ker).dim();
}

std::vector<ParallelClass> parallel_classes(const SectionBody& sec,
                                            int n_faces, int n_dirs, Rng& rng,
                                            double tol) {
  if (sec.compact)
    throw std::invalid_argument("parallel_classes: body is compact");
  if (n_dirs < 1 || n_faces < 1)
    throw std::invalid_argument("parallel_classes: need positive counts");
  std::vector<AlgMat> palette;
  for (int i = 0; i < n_dirs; ++i)
    palette.push_back(random_column_in(rng, sec.ker));

  std::vector<ParallelClass> classes;
  const Field f = sec.field();
  const int n = sec.n();
  for (int i = 0; i < n_faces; ++i) {
    const AlgMat& k =
        palette[static_cast<size_t>(rng.uniform_int(0, n_dirs - 1))];
    Subspace w = Subspace::zero(f, n);
    Subspace r = Subspace::zero(f, n);
    for (int attempt = 0; attempt < 16; ++attempt) {
      AlgMat cols(f, n, 2);
      cols.set_col(0, k);
      cols.set_col(1, rand_unit_column(rng, f, n));
      w = span_of_columns(cols);
      if (w.dim() != 2) continue;
      r = subspace_intersect(w, sec.ker);
      if (r.dim() == 1) break;
    }
    if (w.dim() != 2 || r.dim() != 1)
      throw CheckFailure("parallel_classes: failed to sample a rank-2 face");
    Herm p = ray_projector(r.basis.col(0));
    Face face{f, n, w};
    bool placed = false;
    for (ParallelClass& cls : classes) {
      if (fro_norm(cls.direction - p) <= tol) {
        cls.members.push_back(face);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(ParallelClass{p, {face}});
  }
  return classes;
}

}  // namespace conelat
