#include "relorbit/exact_numbers/quadratic_scalar.hpp"

#include <cmath>

#include "relorbit/error.hpp"

namespace relorbit::exact_numbers {
namespace {

constexpr const char* kModule = "exact_numbers";

// d = f^2 * core with core square-free.
std::pair<long, long> square_free_split(long d) {
  long f = 1;
  long core = d;
  for (long p = 2; p <= core / p; ++p) {
    while (core % (p * p) == 0) {
      core /= p * p;
      f *= p;
    }
  }
  return {f, core};
}

}  // namespace

BigInt floor_rational(const Rational& r) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

BigInt ceil_rational(const Rational& r) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

QuadraticScalar::QuadraticScalar(Rational p, Rational q, long d) : p_(std::move(p)), q_(std::move(q)) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, kModule, "negative radicand");
  p_.canonicalize();
  q_.canonicalize();
  if (d == 0 || q_ == 0) {
    q_ = 0;
    d_ = 0;
    return;
  }
  const auto [f, core] = square_free_split(d);
  q_ *= f;
  if (core == 1) {
    p_ += q_;
    q_ = 0;
    d_ = 0;
  } else {
    d_ = core;
  }
}

QuadraticScalar QuadraticScalar::raw(Rational p, Rational q, long d) {
  QuadraticScalar out;
  out.p_ = std::move(p);
  out.q_ = std::move(q);
  out.d_ = d;
  out.normalize_zero_surd();
  return out;
}

void QuadraticScalar::normalize_zero_surd() {
  if (q_ == 0) d_ = 0;
}

long QuadraticScalar::common_radicand(const QuadraticScalar& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw Error(ErrorCode::FieldMismatch, kModule,
              "mixing sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(o.d_) + ")");
}

QuadraticScalar& QuadraticScalar::operator+=(const QuadraticScalar& o) {
  d_ = common_radicand(o);
  p_ += o.p_;
  q_ += o.q_;
  normalize_zero_surd();
  return *this;
}

QuadraticScalar& QuadraticScalar::operator-=(const QuadraticScalar& o) {
  d_ = common_radicand(o);
  p_ -= o.p_;
  q_ -= o.q_;
  normalize_zero_surd();
  return *this;
}

QuadraticScalar& QuadraticScalar::operator*=(const QuadraticScalar& o) {
  const long d = common_radicand(o);
  if (o.d_ == 0) {
    p_ *= o.p_;
    q_ *= o.p_;
  } else if (d_ == 0) {
    q_ = p_ * o.q_;
    p_ *= o.p_;
  } else {
    Rational np = p_ * o.p_ + q_ * o.q_ * d;
    q_ = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(np);
  }
  d_ = d;
  normalize_zero_surd();
  return *this;
}

QuadraticScalar& QuadraticScalar::operator/=(const QuadraticScalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, kModule, "division by zero");
  const long d = common_radicand(o);
  if (o.d_ == 0) {
    p_ /= o.p_;
    q_ /= o.p_;
    d_ = d;
    normalize_zero_surd();
    return *this;
  }
  // (p + q r)/(u + v r) = (p + q r)(u - v r)/(u^2 - v^2 d)
  const Rational norm = o.p_ * o.p_ - o.q_ * o.q_ * d;
  *this *= o.conjugate();
  p_ /= norm;
  q_ /= norm;
  normalize_zero_surd();
  return *this;
}

int QuadraticScalar::sign() const {
  const int sp = sgn(p_);
  const int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 against q^2 d.
  const int c = cmp(p_ * p_, q_ * q_ * d_);
  return c > 0 ? sp : sq;
}

std::pair<Rational, Rational> QuadraticScalar::enclosure(unsigned bits) const {
  if (d_ == 0) return {p_, p_};
  // sqrt(q^2 d) = sqrt(n m) / m for q^2 d = n/m.
  const Rational r = q_ * q_ * d_;
  BigInt scaled = r.get_num() * r.get_den();
  scaled <<= 2 * bits;
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  BigInt den = r.get_den();
  den <<= bits;
  Rational lo_root(s, den);
  Rational hi_root(s + 1, den);
  lo_root.canonicalize();
  hi_root.canonicalize();
  if (sgn(q_) > 0) return {p_ + lo_root, p_ + hi_root};
  return {p_ - hi_root, p_ - lo_root};
}

BigInt QuadraticScalar::floor() const {
  if (d_ == 0) return floor_rational(p_);
  const auto [lo, hi] = enclosure(0);
  BigInt f = floor_rational(lo);
  // Width is at most 1, so the floor is f or f + 1; the value is irrational, never an integer.
  if (hi <= Rational(f + 1)) return f;
  if ((*this - QuadraticScalar(Rational(f + 1))).sign() > 0) return f + 1;
  return f;
}

BigInt QuadraticScalar::ceil() const { return -(-*this).floor(); }

double QuadraticScalar::to_double() const {
  if (d_ == 0) return p_.get_d();
  for (unsigned bits = 64;; bits *= 2) {
    const auto [lo, hi] = enclosure(bits);
    const Rational width = hi - lo;
    const bool same_sign = sgn(lo) == sgn(hi) && sgn(lo) != 0;
    if ((same_sign && width <= Rational(::abs(lo)) / Rational(BigInt(1) << 60)) || bits >= 8192) {
      return Rational((lo + hi) / 2).get_d();
    }
  }
}

QuadraticScalar min(const QuadraticScalar& a, const QuadraticScalar& b) { return a <= b ? a : b; }
QuadraticScalar max(const QuadraticScalar& a, const QuadraticScalar& b) { return a >= b ? a : b; }

}  // namespace relorbit::exact_numbers
