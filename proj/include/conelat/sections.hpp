#pragma once

#include <vector>

#include "conelat/cone.hpp"

namespace conelat {

// Section {A psd : <M,A> = 1} of the psd cone by a hyperplane orthogonal to
// a psd functional M. The recession cone {A psd : <M,A> = 0} coincides with
// the cone face F_{ker M}, so the body is compact iff M is positive definite
// and otherwise contains the infinite directions supported on ker M. The body
// never contains a line (the psd cone is pointed).
struct SectionBody {
  SlicedBody body;
  Subspace ker;  // ker M over F
  bool compact = false;

  Field field() const { return body.field; }
  int n() const { return body.n; }
};

// Validates M psd and nonzero; throws std::invalid_argument otherwise.
SectionBody make_section(Field f, int n, const Herm& m, double psd_tol = 1e-8);

// The recession cone as a face of the ambient cone: nu-subspace ker M.
Face recession_face(const SectionBody& sec);

// Extreme directions of the recession cone, normalized to unit trace. Empty
// when compact; the unique ray when dim ker M = 1; otherwise rank-one
// representatives u_i u_i* over an orthonormal basis of ker M (the recession
// cone itself is F_{ker M}, a copy of the psd cone on ker M, which has a
// continuum of extreme rays).
std::vector<Herm> recession_rays(const SectionBody& sec);

// Infinite directions of the slice face F_W: the subspace W cap ker M.
Subspace face_recession(const SectionBody& sec, const Face& f);
bool face_is_compact(const SectionBody& sec, const Face& f);

// Does F_W intersect the affine slice at all? False iff W <= ker M.
bool face_meets_body(const SectionBody& sec, const Face& f);

// True iff the recession set of a non-compact face is a single ray. The
// kernel-dimension computation is cross-validated against n_dirs sampled
// recession directions (all must collapse to one projector); disagreement
// raises CheckFailure. Compact faces are not applicable and raise
// std::invalid_argument.
bool unique_ray_check(const SectionBody& sec, const Face& f, int n_dirs,
                      Rng& rng, double tol = 1e-8);

// Number of independent infinite directions shared by two faces:
// dim(W_A cap W_B cap ker M).
int shared_direction_check(const SectionBody& sec, const Face& a,
                           const Face& b);

struct ParallelClass {
  Herm direction;  // unit-trace rank-one projector supported on ker M
  std::vector<Face> members;
};

// Samples n_faces non-compact rank-2 faces span(k, g) whose kernel vector k
// is drawn from a palette of n_dirs random kernel directions (so classes have
// several members), then groups the faces by recession ray, with projector
// distance <= tol deciding equality. The class directions enumerate extreme
// points at infinity of the projective closure; they are exactly extreme
// directions of the maximal face F_{ker M}. Throws std::invalid_argument for
// compact bodies.
std::vector<ParallelClass> parallel_classes(const SectionBody& sec,
                                            int n_faces, int n_dirs, Rng& rng,
                                            double tol = 1e-8);

// Random unit column of a nonzero subspace.
AlgMat random_column_in(Rng& rng, const Subspace& s);

// Rank-one slice point v v* / <M, v v*>; throws std::invalid_argument when v
// lies in ker M (the direction escapes to infinity).
Herm slice_extreme_from(const SectionBody& sec, const AlgMat& v);

}  // namespace conelat
