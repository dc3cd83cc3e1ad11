#pragma once

#include <variant>

#include "relorbit/exact_numbers/interval.hpp"
#include "relorbit/exact_numbers/quadratic_scalar.hpp"

namespace relorbit::exact_numbers {

// A real number known either exactly (quadratic field element) or by a
// validated rational enclosure. Decisions on enclosures that are not
// determined raise PrecisionExhausted.
class Real {
 public:
  Real() = default;
  Real(long v) : v_(QuadraticScalar(v)) {}  // NOLINT(google-explicit-constructor)
  Real(const BigInt& v) : v_(QuadraticScalar(v)) {}  // NOLINT
  Real(Rational v) : v_(QuadraticScalar(std::move(v))) {}  // NOLINT
  Real(QuadraticScalar v) : v_(std::move(v)) {}  // NOLINT
  Real(Interval v) : v_(std::move(v)) {}  // NOLINT

  bool is_exact() const { return std::holds_alternative<QuadraticScalar>(v_); }
  const QuadraticScalar& exact() const;
  const Interval* interval() const { return std::get_if<Interval>(&v_); }
  // 0 for exact values.
  unsigned precision() const;

  Interval enclosure(unsigned bits) const;
  int sign() const;
  BigInt floor() const;
  BigInt ceil() const { return -(-*this).floor(); }
  Real frac() const { return *this - Real(floor()); }
  Real abs() const;
  double to_double() const;

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }

 private:
  std::variant<QuadraticScalar, Interval> v_;
};

// Sign of a - b; throws PrecisionExhausted when undecided.
int compare(const Real& a, const Real& b);
inline bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }
// Equality is decided, not structural: it may also throw for overlapping enclosures.
inline bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }

// Enclosure-aware extrema (hull for inexact operands).
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

}  // namespace relorbit::exact_numbers
