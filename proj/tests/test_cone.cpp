#include <doctest.h>

#include "conelat/cone.hpp"
#include "conelat/rng.hpp"

using namespace conelat;

TEST_CASE("face lattice operations satisfy the rank identity") {
  Rng rng(derive_seed(20260815, 3, 0));
  for (Field f : {Field::R, Field::C, Field::H}) {
    for (int t = 0; t < 40; ++t) {
      int n = 4;
      Herm a = rand_psd(rng, f, n, 1 + t % 3);
      Herm b = rand_psd(rng, f, n, 1 + (t + 1) % 3);
      Face fa = face_of(a), fb = face_of(b);
      Face j = face_join(fa, fb), m = face_meet(fa, fb);
      CHECK(fa.rank() + fb.rank() == j.rank() + m.rank());
      CHECK(face_leq(fa, j));
      CHECK(face_leq(m, fb));
      // nu(join) computed independently as range of the sum
      Face j2 = face_of(Herm::hermitize(a.mat() + b.mat()));
      CHECK(face_eq(j, j2));
    }
  }
}

TEST_CASE("modular law holds in the face lattice") {
  Rng rng(derive_seed(20260815, 3, 1));
  for (Field f : {Field::R, Field::C, Field::H}) {
    for (int t = 0; t < 25; ++t) {
      int n = 4;
      Face fa = face_of(rand_psd(rng, f, n, 1));
      Face fh = face_join(fa, face_of(rand_psd(rng, f, n, 1 + t % 2)));
      Face fg = face_of(rand_psd(rng, f, n, 1 + (t + 1) % 3));
      REQUIRE(face_leq(fa, fh));
      Face lhs = face_join(fa, face_meet(fg, fh));
      Face rhs = face_meet(face_join(fa, fg), fh);
      CHECK(face_eq(lhs, rhs, 1e-6));
    }
  }
}

TEST_CASE("in_face and membership") {
  Rng rng(derive_seed(20260815, 3, 2));
  Field f = Field::C;
  Herm a = rand_psd(rng, f, 4, 2);
  Face fa = face_of(a);
  CHECK(in_face(a, fa));
  CHECK(in_face(a, Face::full(f, 4)));
  Herm b = rand_psd(rng, f, 4, 3);
  CHECK_FALSE(in_face(b, fa));
  SlicedBody body = SlicedBody::trace_slice(f, 4);
  CHECK(body.is_compact());
  Herm an = a * (1.0 / a.trace());
  CHECK(body.contains(an));
  CHECK_FALSE(body.contains(a * 2.0));
}

TEST_CASE("trace-slice barycenter is the normalized projector") {
  Rng rng(derive_seed(20260815, 3, 3));
  for (Field f : {Field::R, Field::C, Field::H}) {
    SlicedBody body = SlicedBody::trace_slice(f, 3);
    Face full = Face::full(f, 3);
    Herm b = face_barycenter(full, body);
    CHECK(approx_eq(b, Herm::identity(f, 3) * (1.0 / 3.0), 1e-12));
    Face fa = face_of(rand_psd(rng, f, 3, 2));
    Herm b2 = face_barycenter(fa, body);
    CHECK(body.contains(b2, 1e-9));
    CHECK(approx_eq(b2, projector(fa.range) * 0.5, 1e-9));
    CHECK_THROWS(face_barycenter(Face::apex(f, 3), body));
  }
}

TEST_CASE("monte-carlo barycenter matches the exact beta-moment oracle") {
  // body {A in S^2_+ : <diag(1,2), A> = 1}; exact barycenter diag(1/2, 1/4)
  Field f = Field::R;
  Herm m(f, 2);
  m.set(0, 0, Alg::scalar(f, 1.0));
  m.set(1, 1, Alg::scalar(f, 2.0));
  SlicedBody body{f, 2, m};
  CHECK_FALSE(body.is_trace_slice());
  Herm b = face_barycenter(Face::full(f, 2), body, 60000, 4242);
  CHECK(std::abs(b.at(0, 0).re() - 0.5) < 0.02);
  CHECK(std::abs(b.at(1, 1).re() - 0.25) < 0.02);
  CHECK(std::abs(b.at(0, 1).re()) < 0.02);
  CHECK(inner(body.slice, b) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("radial decomposition reconstructs the point") {
  Rng rng(derive_seed(20260815, 3, 4));
  for (Field f : {Field::R, Field::C, Field::H}) {
    SlicedBody body = SlicedBody::trace_slice(f, 3);
    for (int t = 0; t < 12; ++t) {
      Herm a = rand_psd(rng, f, 3, 1 + t % 3);
      a = a * (1.0 / a.trace());
      RadialDecomposition rd = radial_decompose(a, body);
      CHECK(rd.lambda >= 0.0);
      CHECK(rd.lambda <= 1.0 + 1e-12);
      Herm recon = rd.b * (1.0 - rd.lambda) + rd.p * rd.lambda;
      CHECK(fro_norm(recon - a) <= 1e-9 * (1.0 + fro_norm(a)));
      CHECK(body.contains(rd.p, 1e-7));
      if (rd.lambda > 1e-6 && face_of(a).rank() > 1) {
        // p sits on the relative boundary: strictly smaller face
        CHECK(face_of(rd.p, 1e-7).rank() < face_of(a).rank());
      }
    }
  }
}

TEST_CASE("radial extension of the identity is the identity") {
  Rng rng(derive_seed(20260815, 3, 5));
  Field f = Field::C;
  SlicedBody body = SlicedBody::trace_slice(f, 3);
  auto id = [](const Herm& x) { return x; };
  for (int t = 0; t < 6; ++t) {
    Herm a = rand_psd(rng, f, 3, 1 + t % 3);
    a = a * (1.0 / a.trace());
    Herm ext = radial_extend(id, body, body, a);
    CHECK(fro_norm(ext - a) <= 1e-6 * (1.0 + fro_norm(a)));
  }
}

TEST_CASE("radial extension reproduces unitary conjugation") {
  Rng rng(derive_seed(20260815, 3, 6));
  for (Field f : {Field::R, Field::C, Field::H}) {
    SlicedBody body = SlicedBody::trace_slice(f, 3);
    AlgMat u = orthonormalize(rand_mat(rng, f, 3, 3));
    REQUIRE(u.cols() == 3);
    auto conj_map = [&](const Herm& x) {
      return Herm::hermitize(u * (x.mat() * u.adjoint()));
    };
    for (int t = 0; t < 4; ++t) {
      Herm a = rand_psd(rng, f, 3, 2 + t % 2);
      a = a * (1.0 / a.trace());
      Herm expect = conj_map(a);
      Herm ext = radial_extend(conj_map, body, body, a);
      CHECK(fro_norm(ext - expect) <= 1e-6 * (1.0 + fro_norm(expect)));
    }
  }
}

TEST_CASE("support values and sampled hausdorff distance") {
  Rng rng(derive_seed(20260815, 3, 7));
  Field f = Field::R;
  SlicedBody body = SlicedBody::trace_slice(f, 3);
  Herm a = rand_psd(rng, f, 3, 2);
  Face fa = face_of(a);
  Face fb = face_of(rand_psd(rng, f, 3, 1));
  CHECK(hausdorff_distance(fa, fa, body, 50, rng) <= 1e-12);
  Face j = face_join(fa, fb);
  if (!face_eq(j, fa)) {
    CHECK(hausdorff_distance(fa, j, body, 100, rng) > 1e-4);
  }
  // support is monotone under face inclusion
  for (int t = 0; t < 20; ++t) {
    Herm d = rand_herm(rng, f, 3);
    d = d * (1.0 / fro_norm(d));
    CHECK(support_value(fa, body, d) <=
          support_value(j, body, d) + 1e-10);
  }
  // support of the full body in direction of a projector is 1
  Herm e(f, 3);
  e.set(0, 0, Alg::one(f));
  CHECK(support_value(Face::full(f, 3), body, e) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("extreme points are rank one and lie on the face") {
  Rng rng(derive_seed(20260815, 3, 8));
  for (Field f : {Field::R, Field::C, Field::H}) {
    SlicedBody body = SlicedBody::trace_slice(f, 4);
    Face fa = face_of(rand_psd(rng, f, 4, 3));
    for (int t = 0; t < 10; ++t) {
      Herm x = extreme_point_on(fa, body, rng);
      CHECK(rank_of(x) == 1);
      CHECK(in_face(x, fa, 1e-7));
      CHECK(body.contains(x, 1e-8));
      Herm y = random_point_on(fa, body, rng);
      CHECK(in_face(y, fa, 1e-6));
      CHECK(face_of(y, 1e-7).rank() == fa.rank());
    }
  }
}
