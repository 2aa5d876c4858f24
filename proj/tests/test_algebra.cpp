#include <doctest.h>

#include "conelat/algebra.hpp"
#include "conelat/io.hpp"
#include "conelat/linalg.hpp"
#include "conelat/rng.hpp"

using namespace conelat;

TEST_CASE("quaternion basis products") {
  Field f = Field::H;
  Alg i = Alg::unit(f, 1), j = Alg::unit(f, 2), k = Alg::unit(f, 3);
  CHECK(approx_eq(i * j, k));
  CHECK(approx_eq(j * i, -k));
  CHECK(approx_eq(i * i, -Alg::one(f)));
  CHECK(approx_eq(j * j, -Alg::one(f)));
  CHECK(approx_eq(k * k, -Alg::one(f)));

  Alg a = Alg::one(f) + i;
  Alg b = Alg::one(f) + j;
  Alg prod = a * b;  // 1 + i + j + k
  CHECK(approx_eq(prod, Alg(f, {1.0, 1.0, 1.0, 1.0})));
  CHECK(prod.norm2() == doctest::Approx(4.0));
}

TEST_CASE("octonion non-associativity witness") {
  Field f = Field::O;
  Alg e1 = Alg::unit(f, 1), e2 = Alg::unit(f, 2), e4 = Alg::unit(f, 4);
  Alg e7 = Alg::unit(f, 7);
  CHECK(approx_eq((e1 * e2) * e4, e7));
  CHECK(approx_eq(e1 * (e2 * e4), -e7));
}

TEST_CASE("composition law and conjugation over all fields") {
  Rng rng(derive_seed(20260815, 1, 0));
  for (Field f : {Field::R, Field::C, Field::H, Field::O}) {
    for (int t = 0; t < 200; ++t) {
      Alg x = rand_alg(rng, f), y = rand_alg(rng, f);
      CHECK((x * y).norm2() ==
            doctest::Approx(x.norm2() * y.norm2()).epsilon(1e-9));
      CHECK(approx_eq((x * y).conj(), y.conj() * x.conj(), 1e-9));
      if (x.norm2() > 1e-12)
        CHECK(approx_eq(x * x.inverse(), Alg::one(f), 1e-8));
    }
  }
}

TEST_CASE("alternativity and Moufang identity for octonions") {
  Rng rng(derive_seed(20260815, 1, 1));
  Field f = Field::O;
  for (int t = 0; t < 300; ++t) {
    Alg x = rand_alg(rng, f), y = rand_alg(rng, f), z = rand_alg(rng, f);
    CHECK(approx_eq(x * (x * y), (x * x) * y, 1e-8));
    CHECK(approx_eq((y * x) * x, y * (x * x), 1e-8));
    CHECK(approx_eq(((x * y) * x) * z, x * (y * (x * z)), 1e-7));
  }
}

TEST_CASE("realification is a *-homomorphism") {
  Rng rng(derive_seed(20260815, 1, 2));
  for (Field f : {Field::R, Field::C, Field::H}) {
    for (int t = 0; t < 20; ++t) {
      AlgMat a = rand_mat(rng, f, 3, 3), b = rand_mat(rng, f, 3, 3);
      Eigen::MatrixXcd lhs = realify(a * b);
      Eigen::MatrixXcd rhs = realify(a) * realify(b);
      CHECK((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
      CHECK((realify(a.adjoint()) - realify(a).adjoint()).norm() <= 1e-12);
      AlgMat back = from_realified(f, realify(a));
      CHECK(approx_eq(back, a, 1e-12));
    }
  }
  CHECK_THROWS(realify(rand_mat(rng, Field::O, 2, 2)));
}

TEST_CASE("quaternionic spectrum doubling") {
  Rng rng(derive_seed(20260815, 1, 3));
  Herm h = rand_herm(rng, Field::H, 4);
  auto raw = eigenvalues_realified(h);
  CHECK(raw.size() == 8);
  auto sp = spectrum(h);
  CHECK(sp.size() == 4);
  double tr = 0.0;
  for (double v : sp) tr += v;
  CHECK(tr == doctest::Approx(h.trace()).epsilon(1e-9));
}

TEST_CASE("hermitian invariant enforced") {
  AlgMat m(Field::C, 2, 2);
  m.at(0, 1) = Alg(Field::C, {1.0, 2.0});
  m.at(1, 0) = Alg(Field::C, {1.0, 2.0});  // should be the conjugate
  CHECK_THROWS(Herm::from_checked(m));
  m.at(1, 0) = Alg(Field::C, {1.0, -2.0});
  CHECK_NOTHROW(Herm::from_checked(m));
}

TEST_CASE("jordan product is commutative and traces agree") {
  Rng rng(derive_seed(20260815, 1, 4));
  for (Field f : {Field::R, Field::C, Field::H, Field::O}) {
    int n = 3;
    Herm a = rand_herm(rng, f, n), b = rand_herm(rng, f, n);
    Herm ab = jordan(a, b), ba = jordan(b, a);
    CHECK(approx_eq(ab, ba, 1e-9));
    CHECK(inner(a, b) == doctest::Approx(inner(b, a)).epsilon(1e-9));
  }
}

TEST_CASE("psd detection on constructed examples") {
  Rng rng(derive_seed(20260815, 1, 5));
  for (Field f : {Field::R, Field::C, Field::H}) {
    Herm a = rand_psd(rng, f, 3, 2);
    CHECK(is_psd(a));
    Herm id = Herm::identity(f, 3);
    CHECK(is_psd(a + id));
    CHECK_FALSE(is_psd(a - 10.0 * id));
    CHECK(is_psd(Herm(f, 3)));  // zero matrix
  }
}

TEST_CASE("exact rational backend over C") {
  Field f = Field::C;
  AlgQ x(f, {Rational(3, 2), Rational(1, 3)});
  CHECK(x.norm2() == Rational(85, 36));
  AlgQ y(f, {Rational(0), Rational(1)});
  AlgQ xy = x * y;  // (3/2 + i/3) * i = -1/3 + (3/2) i
  CHECK(xy[0] == Rational(-1, 3));
  CHECK(xy[1] == Rational(3, 2));
  CHECK((x * x.inverse()) == AlgQ::one(f));
}

TEST_CASE("matrix interchange round trip") {
  Rng rng(derive_seed(20260815, 1, 6));
  for (Field f : {Field::R, Field::C, Field::H, Field::O}) {
    Herm h = rand_herm(rng, f, 3);
    Json j = to_json(h);
    Herm h2 = herm_from_json(j);
    CHECK(approx_eq(h, h2, 1e-14));
    CHECK(dump_canonical(to_json(h2)) == dump_canonical(j));
  }
}

TEST_CASE("exact interchange round trip is bit-exact") {
  HermQ h(Field::C, 2);
  h.set(0, 0, AlgQ::scalar(Field::C, Rational(1, 3)));
  h.set(1, 1, AlgQ::scalar(Field::C, Rational(-7, 5)));
  h.set(0, 1, AlgQ(Field::C, {Rational(2, 7), Rational(22, 7)}));
  Json j = to_json(h);
  HermQ h2 = hermq_from_json(j);
  CHECK(h2.at(0, 1)[1] == Rational(22, 7));
  CHECK(dump_canonical(to_json(h2)) == dump_canonical(j));
  // tampering with hermiticity must be rejected
  Json bad = j;
  bad["entries"][1][0][1] = "1/2";
  CHECK_THROWS(hermq_from_json(bad));
}
