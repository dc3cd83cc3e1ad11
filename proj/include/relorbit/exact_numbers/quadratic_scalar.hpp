#pragma once

#include <gmpxx.h>

#include <compare>
#include <utility>

namespace relorbit::exact_numbers {

using BigInt = mpz_class;
using Rational = mpq_class;

// p + q*sqrt(d) with rational p, q and square-free d >= 0 (d == 0 iff q == 0).
class QuadraticScalar {
 public:
  QuadraticScalar() = default;
  QuadraticScalar(long value) : p_(value) {}  // NOLINT(google-explicit-constructor)
  QuadraticScalar(const BigInt& value) : p_(value) {}  // NOLINT(google-explicit-constructor)
  QuadraticScalar(Rational value) : p_(std::move(value)) { p_.canonicalize(); }  // NOLINT
  // d is reduced to its square-free part; the square factor moves into q.
  QuadraticScalar(Rational p, Rational q, long d);

  static QuadraticScalar sqrt(long d) { return QuadraticScalar(Rational(0), Rational(1), d); }

  const Rational& rational_part() const { return p_; }
  const Rational& surd_coefficient() const { return q_; }
  long radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && p_ == 0; }

  int sign() const;
  BigInt floor() const;
  BigInt ceil() const;
  QuadraticScalar abs() const { return sign() < 0 ? -*this : *this; }
  QuadraticScalar conjugate() const { return raw(p_, -q_, d_); }
  // Fractional part in [0,1).
  QuadraticScalar frac() const { return *this - QuadraticScalar(floor()); }

  // Half-open rational enclosure [lo, hi) of width at most 2^-bits (exact point if rational).
  std::pair<Rational, Rational> enclosure(unsigned bits) const;
  double to_double() const;

  QuadraticScalar operator-() const { return raw(-p_, -q_, d_); }
  QuadraticScalar& operator+=(const QuadraticScalar& o);
  QuadraticScalar& operator-=(const QuadraticScalar& o);
  QuadraticScalar& operator*=(const QuadraticScalar& o);
  QuadraticScalar& operator/=(const QuadraticScalar& o);

  friend QuadraticScalar operator+(QuadraticScalar a, const QuadraticScalar& b) { return a += b; }
  friend QuadraticScalar operator-(QuadraticScalar a, const QuadraticScalar& b) { return a -= b; }
  friend QuadraticScalar operator*(QuadraticScalar a, const QuadraticScalar& b) { return a *= b; }
  friend QuadraticScalar operator/(QuadraticScalar a, const QuadraticScalar& b) { return a /= b; }

  friend bool operator==(const QuadraticScalar& a, const QuadraticScalar& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const QuadraticScalar& a, const QuadraticScalar& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static QuadraticScalar raw(Rational p, Rational q, long d);
  long common_radicand(const QuadraticScalar& o) const;
  void normalize_zero_surd();

  Rational p_{0};
  Rational q_{0};
  long d_ = 0;
};

QuadraticScalar min(const QuadraticScalar& a, const QuadraticScalar& b);
QuadraticScalar max(const QuadraticScalar& a, const QuadraticScalar& b);

BigInt floor_rational(const Rational& r);
BigInt ceil_rational(const Rational& r);

}  // namespace relorbit::exact_numbers
