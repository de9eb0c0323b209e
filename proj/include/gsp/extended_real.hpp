#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gsp {

// A real number or +infinity. Detour distances become infinite when deleting
// a road disconnects the target, and that has to flow through path values.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  ExtendedReal(double v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if (std::isnan(v) || v == -std::numeric_limits<double>::infinity())
      throw std::domain_error("ExtendedReal: value must be finite or +inf");
  }

  static ExtendedReal infinity() { return ExtendedReal(std::numeric_limits<double>::infinity()); }

  bool is_infinite() const { return std::isinf(value_); }
  bool is_finite() const { return !is_infinite(); }
  double value() const { return value_; }

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) { return ExtendedReal(a.value_ + b.value_); }
  ExtendedReal& operator+=(ExtendedReal o) { return *this = *this + o; }

  // c * inf = inf for c > 0; a zero or negative factor is outside the model.
  friend ExtendedReal scale(double c, ExtendedReal x) {
    if (!(c > 0.0) || !std::isfinite(c))
      throw std::domain_error("ExtendedReal: scale factor must be positive and finite");
    return ExtendedReal(c * x.value_);
  }

  friend ExtendedReal max(ExtendedReal a, ExtendedReal b) { return a.value_ < b.value_ ? b : a; }
  friend ExtendedReal min(ExtendedReal a, ExtendedReal b) { return b.value_ < a.value_ ? b : a; }

  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.value_ == b.value_; }
  friend std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b) { return a.value_ <=> b.value_; }

 private:
  double value_ = 0.0;
};

// Shortest round-trip decimal form, or "inf".
std::string to_string(ExtendedReal x);
std::string format_double(double v);

inline std::ostream& operator<<(std::ostream& os, ExtendedReal x) { return os << to_string(x); }

// Tolerant comparisons used by verification. Two infinities are equal; an
// infinity is never within tolerance of a finite value.
inline bool approx_equal(ExtendedReal a, ExtendedReal b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return std::abs(a.value() - b.value()) <= tol;
}

inline bool approx_less_equal(ExtendedReal a, ExtendedReal b, double tol) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return a.value() <= b.value() + tol;
}

// a is below b by more than tol.
inline bool clearly_less(ExtendedReal a, ExtendedReal b, double tol) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value() - tol;
}

// |a - b|, with inf - inf taken as 0.
inline double deviation(ExtendedReal a, ExtendedReal b) {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite() || b.is_infinite()) return std::numeric_limits<double>::infinity();
  return std::abs(a.value() - b.value());
}

}  // namespace gsp
