#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace conelat {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kRankCutoff = 1e-9;

// a ~ b under the relative-absolute hybrid policy used everywhere downstream.
inline bool approx_eq(double a, double b, double tol = kDefaultTol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

enum class Field : int { R = 1, C = 2, H = 4, O = 8 };

inline int field_dim(Field f) { return static_cast<int>(f); }

inline const char* field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
    case Field::O: return "O";
  }
  throw std::invalid_argument("bad field");
}

inline Field field_from_name(const std::string& s) {
  if (s == "R" || s == "r") return Field::R;
  if (s == "C" || s == "c") return Field::C;
  if (s == "H" || s == "h") return Field::H;
  if (s == "O" || s == "o") return Field::O;
  throw std::invalid_argument("unknown field: " + s);
}

// Real dimension of Herm_n(F).
inline int herm_dim(Field f, int n) {
  return n + n * (n - 1) / 2 * field_dim(f);
}

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace conelat
