#pragma once

#include "relorbit/exact_numbers/quadratic_scalar.hpp"

namespace relorbit::exact_numbers {

// Closed rational interval. Endpoints are rounded outward to `precision`
// significant bits once they grow large, so long computations stay cheap.
class Interval {
 public:
  Interval(Rational point, unsigned precision);
  Interval(Rational lo, Rational hi, unsigned precision);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  unsigned precision() const { return precision_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& r) const { return lo_ <= r && r <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }

  // Throw PrecisionExhausted when the answer is not determined by the enclosure.
  int sign() const;
  BigInt floor() const;

  Interval abs() const;
  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  // Convex hull; used to enclose min/max of two enclosed quantities.
  static Interval hull_min(const Interval& a, const Interval& b);
  static Interval hull_max(const Interval& a, const Interval& b);

 private:
  void round_outward();

  Rational lo_;
  Rational hi_;
  unsigned precision_;
};

}  // namespace relorbit::exact_numbers
