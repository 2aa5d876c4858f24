#include "conelat/algebra.hpp"

#include <algorithm>

namespace conelat {

Eigen::MatrixXcd realify(const AlgMat& m) {
  using CD = std::complex<double>;
  const int r = m.rows(), c = m.cols();
  switch (m.field()) {
    case Field::R: {
      Eigen::MatrixXcd x(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) x(i, j) = CD(m.at(i, j)[0], 0.0);
      return x;
    }
    case Field::C: {
      Eigen::MatrixXcd x(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) x(i, j) = CD(m.at(i, j)[0], m.at(i, j)[1]);
      return x;
    }
    case Field::H: {
      Eigen::MatrixXcd x(2 * r, 2 * c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
          const Alg& q = m.at(i, j);
          CD z(q[0], q[1]), w(q[2], q[3]);
          x(2 * i, 2 * j) = z;
          x(2 * i, 2 * j + 1) = w;
          x(2 * i + 1, 2 * j) = -std::conj(w);
          x(2 * i + 1, 2 * j + 1) = std::conj(z);
        }
      return x;
    }
    case Field::O:
      throw std::domain_error("octonion matrices have no complex realification");
  }
  throw std::invalid_argument("bad field");
}

AlgMat from_realified(Field f, const Eigen::MatrixXcd& x, double tol) {
  const auto rows = x.rows(), cols = x.cols();
  switch (f) {
    case Field::R: {
      AlgMat m(f, static_cast<int>(rows), static_cast<int>(cols));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          if (std::abs(x(i, j).imag()) > tol * (1.0 + std::abs(x(i, j))))
            throw std::invalid_argument("matrix not in image of realify (R)");
          m.at(i, j)[0] = x(i, j).real();
        }
      return m;
    }
    case Field::C: {
      AlgMat m(f, static_cast<int>(rows), static_cast<int>(cols));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          m.at(i, j)[0] = x(i, j).real();
          m.at(i, j)[1] = x(i, j).imag();
        }
      return m;
    }
    case Field::H: {
      if (rows % 2 || cols % 2)
        throw std::invalid_argument("odd realified shape for H");
      const int r = static_cast<int>(rows) / 2, c = static_cast<int>(cols) / 2;
      AlgMat m(f, r, c);
      const double scale = 1.0 + x.norm();
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
          auto z = x(2 * i, 2 * j), w = x(2 * i, 2 * j + 1);
          auto z2 = x(2 * i + 1, 2 * j + 1), w2 = x(2 * i + 1, 2 * j);
          if (std::abs(z2 - std::conj(z)) > tol * scale ||
              std::abs(w2 + std::conj(w)) > tol * scale)
            throw std::invalid_argument("matrix not in image of realify (H)");
          Alg& q = m.at(i, j);
          q[0] = z.real();
          q[1] = z.imag();
          q[2] = w.real();
          q[3] = w.imag();
        }
      return m;
    }
    case Field::O:
      throw std::domain_error("octonion matrices have no complex realification");
  }
  throw std::invalid_argument("bad field");
}

std::vector<double> eigenvalues_realified(const Herm& h) {
  Eigen::MatrixXcd x = realify(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x,
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue computation failed");
  std::vector<double> ev(es.eigenvalues().data(),
                         es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> spectrum(const Herm& h, double tol) {
  std::vector<double> ev = eigenvalues_realified(h);
  if (h.field() != Field::H) return ev;
  std::vector<double> out;
  double scale = 1.0;
  for (double v : ev) scale = std::max(scale, std::abs(v));
  for (size_t i = 0; i + 1 < ev.size(); i += 2) {
    if (std::abs(ev[i] - ev[i + 1]) > tol * scale)
      throw std::runtime_error("quaternionic spectrum not doubled");
    out.push_back(0.5 * (ev[i] + ev[i + 1]));
  }
  return out;
}

bool is_psd(const Herm& h, double tol) {
  if (h.n() == 0) return true;
  std::vector<double> ev = eigenvalues_realified(h);
  double top = std::max(std::abs(ev.front()), std::abs(ev.back()));
  return ev.front() >= -tol * (1.0 + top);
}

}  // namespace conelat
