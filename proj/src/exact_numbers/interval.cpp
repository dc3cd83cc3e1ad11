#include "relorbit/exact_numbers/interval.hpp"

#include <algorithm>

#include "relorbit/error.hpp"

namespace relorbit::exact_numbers {
namespace {

constexpr const char* kModule = "exact_numbers";

// Round r toward -inf (up == false) or +inf to about `precision` significant bits.
Rational round_directed(const Rational& r, unsigned precision, bool up) {
  if (r == 0) return r;
  const long num_bits = static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2));
  if (num_bits + den_bits <= 2 * static_cast<long>(precision) + 64) return r;
  const long shift = static_cast<long>(precision) - (num_bits - den_bits);
  BigInt q;
  if (shift >= 0) {
    BigInt num = r.get_num();
    num <<= static_cast<unsigned long>(shift);
    if (up) {
      mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
    } else {
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
    }
    BigInt den = 1;
    den <<= static_cast<unsigned long>(shift);
    Rational out(q, den);
    out.canonicalize();
    return out;
  }
  BigInt den = r.get_den();
  den <<= static_cast<unsigned long>(-shift);
  if (up) {
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), den.get_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), den.get_mpz_t());
  }
  q <<= static_cast<unsigned long>(-shift);
  return Rational(q);
}

}  // namespace

Interval::Interval(Rational point, unsigned precision)
    : lo_(point), hi_(std::move(point)), precision_(precision) {
  lo_.canonicalize();
  hi_.canonicalize();
}

Interval::Interval(Rational lo, Rational hi, unsigned precision)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_(precision) {
  lo_.canonicalize();
  hi_.canonicalize();
  if (lo_ > hi_) throw Error(ErrorCode::InvalidArgument, kModule, "interval with lo > hi");
  round_outward();
}

void Interval::round_outward() {
  lo_ = round_directed(lo_, precision_, false);
  hi_ = round_directed(hi_, precision_, true);
}

int Interval::sign() const {
  if (lo_ > 0) return 1;
  if (hi_ < 0) return -1;
  if (lo_ == 0 && hi_ == 0) return 0;
  throw PrecisionExhausted(kModule, "sign undecided: enclosure straddles zero");
}

BigInt Interval::floor() const {
  BigInt f = floor_rational(lo_);
  if (floor_rational(hi_) != f) {
    throw PrecisionExhausted(kModule, "floor undecided: enclosure straddles an integer");
  }
  return f;
}

Interval Interval::abs() const {
  if (lo_ >= 0) return *this;
  if (hi_ <= 0) return -*this;
  return Interval(Rational(0), std::max(Rational(-lo_), hi_), precision_);
}

Interval Interval::operator-() const { return Interval(-hi_, -lo_, precision_); }

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_, std::max(a.precision_, b.precision_));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_, std::max(a.precision_, b.precision_));
}

Interval operator*(const Interval& a, const Interval& b) {
  const unsigned prec = std::max(a.precision_, b.precision_);
  if (a.lo_ >= 0 && b.lo_ >= 0) return Interval(a.lo_ * b.lo_, a.hi_ * b.hi_, prec);
  Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  const auto [mn, mx] = std::minmax_element(p, p + 4);
  return Interval(*mn, *mx, prec);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw PrecisionExhausted(kModule, "division by an enclosure containing zero");
  }
  const unsigned prec = std::max(a.precision_, b.precision_);
  return a * Interval(1 / b.hi_, 1 / b.lo_, prec);
}

Interval Interval::hull_min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_), std::max(a.precision_, b.precision_));
}

Interval Interval::hull_max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo_, b.lo_), std::max(a.hi_, b.hi_), std::max(a.precision_, b.precision_));
}

}  // namespace relorbit::exact_numbers
