#pragma once

#include <optional>
#include <vector>

#include "conelat/common.hpp"
#include "conelat/rational.hpp"

namespace conelat {

using RatVec = std::vector<Rational>;

struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rational> e;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
  static RatMat identity(int n);
  Rational& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const {
    return e[static_cast<size_t>(i) * cols + j];
  }
  RatMat transpose() const;
};

RatMat operator*(const RatMat& a, const RatMat& b);
RatMat operator+(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a, const RatMat& b);

RatVec matvec(const RatMat& a, const RatVec& x);
Rational dot(const RatVec& a, const RatVec& b);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& m);

int rank_of(RatMat m);

// Columns form a basis of the kernel.
RatMat nullspace(const RatMat& m);

// Exact solution of A x = b, or nullopt when inconsistent. For
// underdetermined systems returns one particular solution.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

Rational det(RatMat m);
RatMat inverse(const RatMat& m);  // throws std::domain_error when singular

}  // namespace conelat
