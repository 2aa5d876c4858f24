#include "conelat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

#include "conelat/rng.hpp"

namespace conelat {

namespace {

// down-sets as bit rows for the subset scans
struct BitRows {
  int m, words;
  std::vector<uint64_t> bits;
  BitRows(int m_) : m(m_), words((m_ + 63) / 64), bits(static_cast<size_t>(m_) * words) {}
  void set(int r, int c) { bits[static_cast<size_t>(r) * words + c / 64] |= 1ULL << (c % 64); }
  bool get(int r, int c) const {
    return bits[static_cast<size_t>(r) * words + c / 64] >> (c % 64) & 1;
  }
  const uint64_t* row(int r) const { return &bits[static_cast<size_t>(r) * words]; }
  static bool subset(const uint64_t* a, const uint64_t* b, int words) {
    for (int w = 0; w < words; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  }
};

}  // namespace

FiniteLattice FiniteLattice::from_leq(int m, const std::vector<uint8_t>& leq) {
  if (m <= 0 || m > kMaxSize) throw std::invalid_argument("lattice size out of range");
  if (static_cast<int>(leq.size()) != m * m)
    throw std::invalid_argument("leq table size mismatch");
  FiniteLattice l;
  l.m_ = m;
  l.leq_ = leq;
  // poset axioms
  for (int x = 0; x < m; ++x)
    if (!l.leq(x, x)) throw std::invalid_argument("order not reflexive");
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && l.leq(x, y) && l.leq(y, x))
        throw std::invalid_argument("order not antisymmetric");
  BitRows lower(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (l.leq(y, x)) lower.set(x, y);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (l.leq(y, x) && !BitRows::subset(lower.row(y), lower.row(x), lower.words))
        throw std::invalid_argument("order not transitive");
  l.finish_tables(false);
  return l;
}

void FiniteLattice::finish_tables(bool trusted) {
  const int m = m_;
  BitRows lower(m), upper(m);
  lower_size_.assign(m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (leq(y, x)) {
        lower.set(x, y);
        ++lower_size_[x];
      }
      if (leq(x, y)) upper.set(x, y);
    }
  bottom_ = top_ = -1;
  for (int x = 0; x < m; ++x) {
    if (lower_size_[x] == 1) {
      bool is_bot = true;
      for (int y = 0; y < m && is_bot; ++y)
        if (!leq(x, y)) is_bot = false;
      if (is_bot) bottom_ = x;
    }
    if (lower_size_[x] == m) top_ = x;
  }
  if (bottom_ < 0 || top_ < 0)
    throw std::invalid_argument("poset has no bottom or no top");
  if (trusted) return;  // product() fills tables itself

  meet_.assign(static_cast<size_t>(m) * m, -1);
  join_.assign(static_cast<size_t>(m) * m, -1);
  std::vector<int> by_size(m);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::sort(by_size.begin(), by_size.end(),
            [&](int a, int b) { return lower_size_[a] > lower_size_[b]; });
  std::vector<uint64_t> tmp(lower.words);
  for (int x = 0; x < m; ++x)
    for (int y = x; y < m; ++y) {
      // meet: maximum of the intersection of down-sets
      for (int w = 0; w < lower.words; ++w)
        tmp[w] = lower.row(x)[w] & lower.row(y)[w];
      int mt = -1;
      for (int z : by_size) {
        if (!lower.get(x, z) || !lower.get(y, z)) continue;
        if (BitRows::subset(tmp.data(), lower.row(z), lower.words)) mt = z;
        break;  // first (largest) candidate decides
      }
      if (mt < 0) throw std::invalid_argument("poset is not a meet-semilattice");
      meet_[idx(x, y)] = meet_[idx(y, x)] = mt;
      // join: minimum of the intersection of up-sets
      for (int w = 0; w < upper.words; ++w)
        tmp[w] = upper.row(x)[w] & upper.row(y)[w];
      int jn = -1;
      for (int k = m - 1; k >= 0; --k) {
        int z = by_size[k];
        if (!upper.get(x, z) || !upper.get(y, z)) continue;
        if (BitRows::subset(tmp.data(), upper.row(z), upper.words)) jn = z;
        break;
      }
      if (jn < 0) throw std::invalid_argument("poset is not a join-semilattice");
      join_[idx(x, y)] = join_[idx(y, x)] = jn;
    }
}

FiniteLattice FiniteLattice::product(const FiniteLattice& a,
                                     const FiniteLattice& b) {
  long long mm = static_cast<long long>(a.size()) * b.size();
  if (mm > kMaxSize) throw std::invalid_argument("product lattice too large");
  const int m = static_cast<int>(mm);
  FiniteLattice l;
  l.m_ = m;
  l.fa_ = a.size();
  l.fb_ = b.size();
  auto pi = [&](int i, int j) { return i * b.size() + j; };
  l.leq_.assign(static_cast<size_t>(m) * m, 0);
  l.meet_.assign(static_cast<size_t>(m) * m, -1);
  l.join_.assign(static_cast<size_t>(m) * m, -1);
  for (int i1 = 0; i1 < a.size(); ++i1)
    for (int j1 = 0; j1 < b.size(); ++j1)
      for (int i2 = 0; i2 < a.size(); ++i2)
        for (int j2 = 0; j2 < b.size(); ++j2) {
          int x = pi(i1, j1), y = pi(i2, j2);
          l.leq_[l.idx(x, y)] = a.leq(i1, i2) && b.leq(j1, j2);
          l.meet_[l.idx(x, y)] = pi(a.meet(i1, i2), b.meet(j1, j2));
          l.join_[l.idx(x, y)] = pi(a.join(i1, i2), b.join(j1, j2));
        }
  l.finish_tables(true);
  return l;
}

int FiniteLattice::pair_index(int i, int j) const {
  if (fa_ == 0) throw std::logic_error("not a product lattice");
  return i * fb_ + j;
}

bool FiniteLattice::covers(int x, int y) const {
  if (x == y || !leq(y, x)) return false;
  for (int z = 0; z < m_; ++z)
    if (z != x && z != y && leq(y, z) && leq(z, x)) return false;
  return true;
}

std::vector<int> FiniteLattice::atoms() const {
  std::vector<int> out;
  for (int x = 0; x < m_; ++x)
    if (covers(x, bottom_)) out.push_back(x);
  return out;
}

void FiniteLattice::validate_algebra() const {
  if (m_ > 64)
    throw std::invalid_argument("exhaustive algebra validation capped at 64");
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y) {
      if (meet(x, y) != meet(y, x) || join(x, y) != join(y, x))
        throw CheckFailure("commutativity fails");
      if (meet(x, join(x, y)) != x || join(x, meet(x, y)) != x)
        throw CheckFailure("absorption fails");
      for (int z = 0; z < m_; ++z) {
        if (meet(meet(x, y), z) != meet(x, meet(y, z)))
          throw CheckFailure("meet associativity fails");
        if (join(join(x, y), z) != join(x, join(y, z)))
          throw CheckFailure("join associativity fails");
      }
    }
}

ModularityResult is_modular(const FiniteLattice& l) {
  const int m = l.size();
  for (int x = 0; x < m; ++x)
    for (int z = 0; z < m; ++z) {
      if (!l.leq(x, z)) continue;
      for (int y = 0; y < m; ++y)
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
          return ModularityResult{false, x, y, z};
    }
  return ModularityResult{};
}

bool is_atomistic(const FiniteLattice& l) {
  std::vector<int> at = l.atoms();
  for (int x = 0; x < l.size(); ++x) {
    int j = l.bottom();
    for (int a : at)
      if (l.leq(a, x)) j = l.join(j, a);
    if (j != x) return false;
  }
  return true;
}

bool is_complemented(const FiniteLattice& l) {
  for (int x = 0; x < l.size(); ++x) {
    bool found = false;
    for (int y = 0; y < l.size() && !found; ++y)
      found = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
    if (!found) return false;
  }
  return true;
}

FiniteLattice interval_lattice(const FiniteLattice& l, int u) {
  std::vector<int> elems;
  for (int x = 0; x < l.size(); ++x)
    if (l.leq(x, u)) elems.push_back(x);
  const int k = static_cast<int>(elems.size());
  std::vector<uint8_t> leq(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      leq[static_cast<size_t>(i) * k + j] = l.leq(elems[i], elems[j]);
  return FiniteLattice::from_leq(k, leq);
}

IrreducibilityResult is_irreducible(const FiniteLattice& l) {
  const int m = l.size();
  for (int u = 0; u < m; ++u) {
    if (u == l.bottom() || u == l.top()) continue;
    for (int v = u + 1; v < m; ++v) {
      if (v == l.bottom() || v == l.top()) continue;
      if (l.meet(u, v) != l.bottom() || l.join(u, v) != l.top()) continue;
      long long nu = l.height(u), nv = l.height(v);
      if (nu * nv != m) continue;
      // candidate splitting x -> (x ^ u, x ^ v); verify order-isomorphism
      bool ok = true;
      std::set<std::pair<int, int>> image;
      for (int x = 0; x < m && ok; ++x)
        ok = image.insert({l.meet(x, u), l.meet(x, v)}).second;
      for (int x = 0; x < m && ok; ++x)
        for (int y = 0; y < m && ok; ++y) {
          bool pairwise = l.leq(l.meet(x, u), l.meet(y, u)) &&
                          l.leq(l.meet(x, v), l.meet(y, v));
          if (l.leq(x, y) != pairwise) ok = false;
        }
      if (ok) return IrreducibilityResult{false, u, v};
    }
  }
  return IrreducibilityResult{};
}

// --- isomorphism ------------------------------------------------------------

namespace {

std::vector<uint64_t> order_signatures(const FiniteLattice& l) {
  const int m = l.size();
  std::vector<uint64_t> sig(m);
  std::vector<std::vector<int>> cov_up(m), cov_dn(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (l.covers(y, x)) {
        cov_up[x].push_back(y);
        cov_dn[y].push_back(x);
      }
  for (int x = 0; x < m; ++x) {
    int up = 0;
    for (int y = 0; y < m; ++y)
      if (l.leq(x, y)) ++up;
    sig[x] = splitmix_combine(
        {static_cast<uint64_t>(l.height(x)), static_cast<uint64_t>(up),
         static_cast<uint64_t>(cov_up[x].size()),
         static_cast<uint64_t>(cov_dn[x].size())});
  }
  for (int round = 0; round < 4; ++round) {
    std::vector<uint64_t> next(m);
    for (int x = 0; x < m; ++x) {
      std::vector<uint64_t> ups, dns;
      for (int y : cov_up[x]) ups.push_back(sig[y]);
      for (int y : cov_dn[x]) dns.push_back(sig[y]);
      std::sort(ups.begin(), ups.end());
      std::sort(dns.begin(), dns.end());
      std::vector<uint64_t> all{sig[x], 0x9e3779b9ULL};
      all.insert(all.end(), ups.begin(), ups.end());
      all.push_back(0x85ebca6bULL);
      all.insert(all.end(), dns.begin(), dns.end());
      next[x] = splitmix_combine(all);
    }
    sig = next;
  }
  return sig;
}

bool extend_iso(const FiniteLattice& a, const FiniteLattice& b,
                const std::vector<std::vector<int>>& candidates,
                const std::vector<int>& order, size_t pos,
                std::vector<int>& map, std::vector<uint8_t>& used) {
  if (pos == order.size()) return true;
  int x = order[pos];
  for (int y : candidates[x]) {
    if (used[y]) continue;
    bool ok = true;
    for (size_t q = 0; q < pos && ok; ++q) {
      int x2 = order[q], y2 = map[x2];
      if (a.leq(x, x2) != b.leq(y, y2) || a.leq(x2, x) != b.leq(y2, y))
        ok = false;
    }
    if (!ok) continue;
    map[x] = y;
    used[y] = 1;
    if (extend_iso(a, b, candidates, order, pos + 1, map, used)) return true;
    used[y] = 0;
    map[x] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> lattice_isomorphism(const FiniteLattice& a,
                                                    const FiniteLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int m = a.size();
  std::vector<uint64_t> sa = order_signatures(a), sb = order_signatures(b);
  {
    std::vector<uint64_t> ta = sa, tb = sb;
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    if (ta != tb) return std::nullopt;
  }
  std::vector<std::vector<int>> candidates(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (sa[x] == sb[y]) candidates[x].push_back(y);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return candidates[x].size() < candidates[y].size();
  });
  std::vector<int> map(m, -1);
  std::vector<uint8_t> used(m, 0);
  if (extend_iso(a, b, candidates, order, 0, map, used)) return map;
  return std::nullopt;
}

// --- polytopes --------------------------------------------------------------

namespace {

// affine coordinates of the vertex set inside its own hull (exact)
struct AffineChart {
  int dim = 0;                     // affine dimension D
  std::vector<RatVec> coords;      // per vertex, length D
};

AffineChart affine_chart(const std::vector<RatVec>& vs) {
  const int k = static_cast<int>(vs.size());
  const int amb = static_cast<int>(vs[0].size());
  RatMat diffs(std::max(k - 1, 1), amb);
  for (int i = 1; i < k; ++i)
    for (int j = 0; j < amb; ++j) diffs.at(i - 1, j) = vs[i][j] - vs[0][j];
  RatMat r = diffs;
  std::vector<int> pivots = (k > 1) ? rref(r) : std::vector<int>{};
  const int d = static_cast<int>(pivots.size());
  AffineChart chart;
  chart.dim = d;
  chart.coords.assign(k, RatVec(d));
  // rows of r are reduced: coordinate j of v - v0 in the row basis is just
  // the entry of v - v0 at pivot column j once we verify consistency
  for (int i = 0; i < k; ++i) {
    RatVec delta(amb);
    for (int j = 0; j < amb; ++j) delta[j] = vs[i][j] - vs[0][j];
    for (int j = 0; j < d; ++j) chart.coords[i][j] = delta[pivots[j]];
    // consistency: delta == sum_j coord_j * row_j
    for (int c = 0; c < amb; ++c) {
      Rational acc = 0;
      for (int j = 0; j < d; ++j) acc += chart.coords[i][j] * r.at(j, c);
      if (acc != delta[c])
        throw std::logic_error("vertex leaves the affine row space");
    }
  }
  return chart;
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  const int amb = static_cast<int>(pts[0].size());
  if (pts.size() == 1) return 0;
  RatMat diffs(static_cast<int>(pts.size()) - 1, amb);
  for (size_t i = 1; i < pts.size(); ++i)
    for (int j = 0; j < amb; ++j) diffs.at(static_cast<int>(i) - 1, j) = pts[i][j] - pts[0][j];
  return rank_of(diffs);
}

}  // namespace

FaceLattice face_lattice(const PolytopeV& p) {
  const int k = static_cast<int>(p.vertices.size());
  if (k < 1 || k > PolytopeV::kMaxVertices)
    throw std::invalid_argument("vertex count out of range");
  if (p.dim < 1 || p.dim > PolytopeV::kMaxDim)
    throw std::invalid_argument("ambient dimension out of range");
  for (const RatVec& v : p.vertices)
    if (static_cast<int>(v.size()) != p.dim)
      throw std::invalid_argument("vertex length mismatch");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (p.vertices[i] == p.vertices[j])
        throw std::invalid_argument("duplicate vertex " + std::to_string(j));

  AffineChart chart = affine_chart(p.vertices);
  const int d = chart.dim;
  const uint32_t all = k == 32 ? ~0u : (1u << k) - 1u;

  std::set<uint32_t> faces;
  faces.insert(0);
  faces.insert(all);

  if (d > 0) {
    // supporting hyperplanes through d affinely independent vertices
    std::vector<int> sel(d);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == d) {
        RatMat rows(std::max(d - 1, 1), d);
        for (int i = 1; i < d; ++i)
          for (int j = 0; j < d; ++j)
            rows.at(i - 1, j) =
                chart.coords[sel[i]][j] - chart.coords[sel[0]][j];
        if (d > 1 && rank_of(rows) != d - 1) return;
        RatMat ns = (d > 1) ? nullspace(rows) : RatMat::identity(1);
        if (ns.cols != 1) return;
        RatVec normal(d);
        for (int j = 0; j < d; ++j) normal[j] = ns.at(j, 0);
        Rational c = dot(normal, chart.coords[sel[0]]);
        bool pos = false, neg = false;
        uint32_t mask = 0;
        for (int v = 0; v < k; ++v) {
          Rational s = dot(normal, chart.coords[v]) - c;
          if (s > 0) pos = true;
          else if (s < 0) neg = true;
          else mask |= 1u << v;
        }
        if (!(pos && neg) && mask != all) faces.insert(mask);
        return;
      }
      for (int v = start; v <= k - (d - depth); ++v) {
        sel[depth] = v;
        rec(v + 1, depth + 1);
      }
    };
    rec(0, 0);

    // close under intersection
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<uint32_t> cur(faces.begin(), faces.end());
      for (size_t i = 0; i < cur.size(); ++i)
        for (size_t j = i + 1; j < cur.size(); ++j)
          if (faces.insert(cur[i] & cur[j]).second) grew = true;
    }
  }

  for (int v = 0; v < k; ++v)
    if (!faces.count(1u << v))
      throw std::invalid_argument(
          "input point " + std::to_string(v) +
          " is not a vertex (not in convex position)");

  std::vector<uint32_t> masks(faces.begin(), faces.end());
  std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  const int m = static_cast<int>(masks.size());
  std::vector<uint8_t> leq(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[static_cast<size_t>(i) * m + j] = (masks[i] & ~masks[j]) == 0;

  FaceLattice fl;
  fl.lattice = FiniteLattice::from_leq(m, leq);
  fl.face_masks = masks;
  fl.face_dims.resize(m);
  for (int i = 0; i < m; ++i) {
    std::vector<RatVec> pts;
    for (int v = 0; v < k; ++v)
      if (masks[i] >> v & 1) pts.push_back(chart.coords[v]);
    fl.face_dims[i] = affine_rank(pts);
  }
  return fl;
}

PolytopeV star_join(const PolytopeV& a, const PolytopeV& b) {
  PolytopeV r;
  r.dim = a.dim + b.dim + 1;
  for (const RatVec& v : a.vertices) {
    RatVec w(r.dim);
    for (int j = 0; j < a.dim; ++j) w[j] = v[j];
    r.vertices.push_back(w);
  }
  for (const RatVec& v : b.vertices) {
    RatVec w(r.dim);
    for (int j = 0; j < b.dim; ++j) w[a.dim + j] = v[j];
    w[r.dim - 1] = 1;
    r.vertices.push_back(w);
  }
  return r;
}

const std::map<std::string, PolytopeV>& polytope_corpus() {
  static const std::map<std::string, PolytopeV> corpus = [] {
    std::map<std::string, PolytopeV> c;
    auto mk = [](int dim, std::vector<std::vector<int>> vs) {
      PolytopeV p;
      p.dim = dim;
      for (auto& v : vs) {
        RatVec r(v.begin(), v.end());
        p.vertices.push_back(r);
      }
      return p;
    };
    c["point"] = mk(1, {{0}});
    c["segment"] = mk(1, {{0}, {1}});
    c["simplex2"] = mk(2, {{0, 0}, {1, 0}, {0, 1}});
    c["simplex3"] = mk(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    c["simplex4"] = mk(4, {{0, 0, 0, 0},
                           {1, 0, 0, 0},
                           {0, 1, 0, 0},
                           {0, 0, 1, 0},
                           {0, 0, 0, 1}});
    c["square"] = mk(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    c["cube"] = mk(3, {{0, 0, 0},
                       {1, 0, 0},
                       {0, 1, 0},
                       {1, 1, 0},
                       {0, 0, 1},
                       {1, 0, 1},
                       {0, 1, 1},
                       {1, 1, 1}});
    c["octahedron"] = mk(3, {{1, 0, 0},
                             {-1, 0, 0},
                             {0, 1, 0},
                             {0, -1, 0},
                             {0, 0, 1},
                             {0, 0, -1}});
    c["pentagon"] = mk(2, {{0, 0}, {2, 0}, {3, 2}, {1, 3}, {-1, 2}});
    return c;
  }();
  return corpus;
}

nlohmann::json to_json(const PolytopeV& p) {
  nlohmann::json vs = nlohmann::json::array();
  for (const RatVec& v : p.vertices) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& x : v) row.push_back(rat_to_string(x));
    vs.push_back(row);
  }
  return nlohmann::json{{"dim", p.dim}, {"vertices", vs}};
}

PolytopeV polytope_from_json(const nlohmann::json& j) {
  PolytopeV p;
  p.dim = j.at("dim").get<int>();
  for (const auto& row : j.at("vertices")) {
    RatVec v;
    for (const auto& x : row) v.push_back(rat_from_string(x.get<std::string>()));
    p.vertices.push_back(v);
  }
  return p;
}

nlohmann::json to_json(const FiniteLattice& l) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < l.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < l.size(); ++j) row.push_back(l.leq(i, j) ? 1 : 0);
    rows.push_back(row);
  }
  return nlohmann::json{{"size", l.size()}, {"leq", rows}};
}

FiniteLattice lattice_from_json(const nlohmann::json& j) {
  int m = j.at("size").get<int>();
  std::vector<uint8_t> leq;
  for (const auto& row : j.at("leq"))
    for (const auto& x : row) leq.push_back(x.get<int>() ? 1 : 0);
  return FiniteLattice::from_leq(m, leq);
}

}  // namespace conelat
