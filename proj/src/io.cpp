#include "conelat/io.hpp"

namespace conelat {

namespace {

Json alg_to_json(const Alg& a) {
  Json arr = Json::array();
  for (int i = 0; i < a.dim(); ++i) arr.push_back(a[i]);
  return arr;
}

Alg alg_from_json(Field f, const Json& j) {
  Alg a(f);
  if (!j.is_array() || static_cast<int>(j.size()) != a.dim())
    throw std::invalid_argument("entry coefficient count mismatch");
  for (int i = 0; i < a.dim(); ++i) a[i] = j[i].get<double>();
  return a;
}

Json algq_to_json(const AlgQ& a) {
  Json arr = Json::array();
  for (int i = 0; i < a.dim(); ++i) arr.push_back(rat_to_string(a[i]));
  return arr;
}

AlgQ algq_from_json(Field f, const Json& j) {
  AlgQ a(f);
  if (!j.is_array() || static_cast<int>(j.size()) != a.dim())
    throw std::invalid_argument("entry coefficient count mismatch");
  for (int i = 0; i < a.dim(); ++i)
    a[i] = rat_from_string(j[i].get<std::string>());
  return a;
}

}  // namespace

Json to_json(const Herm& h) {
  Json entries = Json::array();
  for (int i = 0; i < h.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < h.n(); ++j) row.push_back(alg_to_json(h.at(i, j)));
    entries.push_back(row);
  }
  return Json{{"field", field_name(h.field())}, {"n", h.n()},
              {"entries", entries}};
}

Herm herm_from_json(const Json& j) {
  Field f = field_from_name(j.at("field").get<std::string>());
  int n = j.at("n").get<int>();
  const Json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != n)
    throw std::invalid_argument("row count mismatch");
  AlgMat m(f, n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n)
      throw std::invalid_argument("column count mismatch");
    for (int k = 0; k < n; ++k) m.at(i, k) = alg_from_json(f, entries[i][k]);
  }
  return Herm::from_checked(m, 1e-9);
}

Json to_json(const HermQ& h) {
  Json entries = Json::array();
  for (int i = 0; i < h.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < h.n(); ++j) row.push_back(algq_to_json(h.at(i, j)));
    entries.push_back(row);
  }
  return Json{{"field", field_name(h.field())}, {"n", h.n()},
              {"entries", entries}, {"exact", true}};
}

HermQ hermq_from_json(const Json& j) {
  Field f = field_from_name(j.at("field").get<std::string>());
  if (f != Field::R && f != Field::C)
    throw std::invalid_argument("exact backend covers fields R and C only");
  int n = j.at("n").get<int>();
  const Json& entries = j.at("entries");
  AlgMatQ m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m.at(i, k) = algq_from_json(f, entries[i][k]);
  if (!is_hermitian(m, 0.0))
    throw std::invalid_argument("matrix is not Hermitian");
  return HermQ::from_checked(m);
}

Json to_json(const Subspace& s) {
  Json cols = Json::array();
  for (int j = 0; j < s.dim(); ++j) {
    Json col = Json::array();
    for (int i = 0; i < s.n; ++i) col.push_back(alg_to_json(s.basis.at(i, j)));
    cols.push_back(col);
  }
  return Json{{"field", field_name(s.field)}, {"n", s.n}, {"basis", cols}};
}

Subspace subspace_from_json(const Json& j) {
  Field f = field_from_name(j.at("field").get<std::string>());
  int n = j.at("n").get<int>();
  const Json& cols = j.at("basis");
  AlgMat b(f, n, static_cast<int>(cols.size()));
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    if (static_cast<int>(cols[c].size()) != n)
      throw std::invalid_argument("basis column length mismatch");
    for (int i = 0; i < n; ++i) b.at(i, c) = alg_from_json(f, cols[c][i]);
  }
  // re-orthonormalize defensively; stored bases are orthonormal already
  return span_of_columns(b);
}

std::string dump_canonical(const Json& j) { return j.dump(2); }

}  // namespace conelat
