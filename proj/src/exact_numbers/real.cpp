#include "relorbit/exact_numbers/real.hpp"

#include <algorithm>

#include "relorbit/error.hpp"

namespace relorbit::exact_numbers {
namespace {

constexpr const char* kModule = "exact_numbers";
constexpr unsigned kGuardBits = 32;

Interval to_interval(const QuadraticScalar& x, unsigned precision) {
  if (x.is_rational()) return Interval(x.rational_part(), precision);
  auto [lo, hi] = x.enclosure(precision + kGuardBits);
  return Interval(std::move(lo), std::move(hi), precision);
}

template <class ExactOp, class IntervalOp>
Real combine(const Real& a, const Real& b, ExactOp exact_op, IntervalOp interval_op) {
  if (a.is_exact() && b.is_exact()) return Real(exact_op(a.exact(), b.exact()));
  const unsigned prec = std::max(a.precision(), b.precision());
  const Interval ia = a.is_exact() ? to_interval(a.exact(), prec) : *a.interval();
  const Interval ib = b.is_exact() ? to_interval(b.exact(), prec) : *b.interval();
  return Real(interval_op(ia, ib));
}

}  // namespace

const QuadraticScalar& Real::exact() const {
  if (const auto* q = std::get_if<QuadraticScalar>(&v_)) return *q;
  throw Error(ErrorCode::InvalidArgument, kModule, "value is only known by an enclosure");
}

unsigned Real::precision() const {
  if (const auto* i = std::get_if<Interval>(&v_)) return i->precision();
  return 0;
}

Interval Real::enclosure(unsigned bits) const {
  if (const auto* i = std::get_if<Interval>(&v_)) return *i;
  return to_interval(std::get<QuadraticScalar>(v_), bits);
}

int Real::sign() const {
  return std::visit([](const auto& x) { return x.sign(); }, v_);
}

BigInt Real::floor() const {
  return std::visit([](const auto& x) { return x.floor(); }, v_);
}

Real Real::abs() const {
  return std::visit([](const auto& x) { return Real(x.abs()); }, v_);
}

double Real::to_double() const {
  if (const auto* i = std::get_if<Interval>(&v_)) return i->midpoint().get_d();
  return std::get<QuadraticScalar>(v_).to_double();
}

Real Real::operator-() const {
  return std::visit([](const auto& x) { return Real(-x); }, v_);
}

Real operator+(const Real& a, const Real& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; },
                 [](const auto& x, const auto& y) { return x + y; });
}

Real operator-(const Real& a, const Real& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; },
                 [](const auto& x, const auto& y) { return x - y; });
}

Real operator*(const Real& a, const Real& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; },
                 [](const auto& x, const auto& y) { return x * y; });
}

Real operator/(const Real& a, const Real& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; },
                 [](const auto& x, const auto& y) { return x / y; });
}

int compare(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto& x = a.exact();
    const auto& y = b.exact();
    if (x.is_rational() && y.is_rational()) return cmp(x.rational_part(), y.rational_part());
  }
  return (a - b).sign();
}

Real min(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) return compare(a, b) <= 0 ? a : b;
  const unsigned prec = std::max(a.precision(), b.precision());
  return Real(Interval::hull_min(a.enclosure(prec), b.enclosure(prec)));
}

Real max(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) return compare(a, b) >= 0 ? a : b;
  const unsigned prec = std::max(a.precision(), b.precision());
  return Real(Interval::hull_max(a.enclosure(prec), b.enclosure(prec)));
}

}  // namespace relorbit::exact_numbers
