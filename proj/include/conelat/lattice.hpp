#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "conelat/ratlin.hpp"

namespace conelat {

// Finite lattice given by its order relation; meet/join tables are computed
// (and the lattice property verified) at construction. Elements are indices
// 0..m-1.
class FiniteLattice {
 public:
  static constexpr int kMaxSize = 4096;

  static FiniteLattice from_leq(int m, const std::vector<uint8_t>& leq);
  static FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);

  int size() const { return m_; }
  bool leq(int x, int y) const { return leq_[idx(x, y)] != 0; }
  int meet(int x, int y) const { return meet_[idx(x, y)]; }
  int join(int x, int y) const { return join_[idx(x, y)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool covers(int x, int y) const;    // y covered by x (x covers y)
  std::vector<int> atoms() const;
  int height(int x) const { return lower_size_[x]; }  // |down-set|

  // Exhaustively re-checks commutativity, associativity and absorption of
  // the tables; quadratic/cubic, intended for m <= 64.
  void validate_algebra() const;

  // For product lattices: index of the pair (i, j).
  int pair_index(int i, int j) const;
  std::pair<int, int> factor_sizes() const { return {fa_, fb_}; }

 private:
  size_t idx(int x, int y) const {
    return static_cast<size_t>(x) * m_ + y;
  }
  void finish_tables(bool trusted);
  int m_ = 0;
  std::vector<uint8_t> leq_;
  std::vector<int> meet_, join_;
  std::vector<int> lower_size_;
  int bottom_ = -1, top_ = -1;
  int fa_ = 0, fb_ = 0;  // set for product lattices
};

struct ModularityResult {
  bool modular = true;
  // witness triple with x <= z but x v (y ^ z) != (x v y) ^ z
  int x = -1, y = -1, z = -1;
};
ModularityResult is_modular(const FiniteLattice& l);

bool is_atomistic(const FiniteLattice& l);
bool is_complemented(const FiniteLattice& l);

struct IrreducibilityResult {
  bool irreducible = true;
  int u = -1, v = -1;  // complementary pair splitting L = [0,u] x [0,v]
};
IrreducibilityResult is_irreducible(const FiniteLattice& l);

// Extracts the interval [bottom, u] as a lattice of its own.
FiniteLattice interval_lattice(const FiniteLattice& l, int u);

std::optional<std::vector<int>> lattice_isomorphism(const FiniteLattice& a,
                                                    const FiniteLattice& b);
inline bool lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return lattice_isomorphism(a, b).has_value();
}

// --- polytopes -------------------------------------------------------------

struct PolytopeV {
  static constexpr int kMaxVertices = 12;
  static constexpr int kMaxDim = 5;
  int dim = 0;
  std::vector<RatVec> vertices;
};

struct FaceLattice {
  FiniteLattice lattice;
  std::vector<uint32_t> face_masks;  // vertex bitmask per lattice element
  std::vector<int> face_dims;        // affine dimension, -1 for the empty face
};

// Exact face lattice from the vertex description: facets are found as
// supporting hyperplanes through affinely independent vertex subsets, and
// faces as intersections of facet vertex sets. Inputs must be in convex
// position (every listed point extreme); violations raise with a witness.
FaceLattice face_lattice(const PolytopeV& p);

// Join P1 * P2: P1 embedded at height 0, P2 at height 1 in dimension
// d1 + d2 + 1.
PolytopeV star_join(const PolytopeV& a, const PolytopeV& b);

const std::map<std::string, PolytopeV>& polytope_corpus();

nlohmann::json to_json(const PolytopeV& p);
PolytopeV polytope_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FiniteLattice& l);
FiniteLattice lattice_from_json(const nlohmann::json& j);

}  // namespace conelat
