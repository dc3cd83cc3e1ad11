#include "relorbit/exact_numbers/scalar_format.hpp"

#include <cctype>
#include <cmath>

#include "relorbit/error.hpp"

namespace relorbit::exact_numbers {
namespace {

constexpr const char* kModule = "exact_numbers";

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  QuadraticScalar parse() {
    if (s_.empty()) fail("empty scalar");
    Rational p = 0;
    Rational q = 0;
    long d = 0;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coeff = 1;
      long radicand = 0;
      if (s_.compare(pos_, 5, "sqrt(") == 0) {
        radicand = parse_sqrt();
      } else {
        coeff = parse_number();
        if (peek() == '*') {
          ++pos_;
          radicand = parse_sqrt();
        }
      }
      if (peek() == '/') {
        ++pos_;
        const Rational den = parse_number();
        if (den == 0) fail("zero denominator");
        coeff /= den;
      }
      coeff *= sign;
      if (radicand == 0) {
        p += coeff;
      } else {
        const QuadraticScalar surd = QuadraticScalar::sqrt(radicand);
        if (surd.is_rational()) {
          p += coeff * surd.rational_part();
          continue;
        }
        if (d != 0 && d != surd.radicand()) fail("two different radicands");
        d = surd.radicand();
        q += coeff * surd.surd_coefficient();
      }
    }
    return QuadraticScalar(p, q, d);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, kModule, "cannot parse scalar '" + s_ + "': " + why);
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(s_[pos_++]);
    return out;
  }

  Rational parse_number() {
    std::string whole = digits();
    std::string frac;
    if (peek() == '.') {
      ++pos_;
      frac = digits();
    }
    if (whole.empty() && frac.empty()) fail("expected a number");
    Rational out(BigInt(whole.empty() ? "0" : whole));
    if (!frac.empty()) {
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      out += Rational(BigInt(frac), den);
    }
    out.canonicalize();
    if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      // Allow "p/q" directly; a trailing "/q" after a surd is handled by the caller.
      const std::size_t save = pos_;
      ++pos_;
      const std::string den = digits();
      if (peek() == '*' || peek() == '\0' || peek() == '+' || peek() == '-') {
        if (BigInt(den) == 0) fail("zero denominator");
        out /= Rational(BigInt(den));
      } else {
        pos_ = save;
      }
    }
    return out;
  }

  long parse_sqrt() {
    if (s_.compare(pos_, 5, "sqrt(") != 0) fail("expected sqrt(");
    pos_ += 5;
    const std::string d = digits();
    if (d.empty() || peek() != ')') fail("malformed sqrt(...)");
    ++pos_;
    if (d.size() > 15) fail("radicand too large");
    return std::stol(d);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string digits_of(const BigInt& n) { return n.get_str(); }

// floor(log10 |x|) for non-zero exact x.
long decimal_exponent(const QuadraticScalar& v) {
  double approx = std::log10(std::fabs(v.to_double()));
  long e = std::isfinite(approx) ? static_cast<long>(std::floor(approx)) : 0;
  auto pow10 = [](long k) {
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? QuadraticScalar(Rational(BigInt(1), t)) : QuadraticScalar(t);
  };
  while (v < pow10(e)) --e;
  while (v >= pow10(e + 1)) ++e;
  return e;
}

}  // namespace

QuadraticScalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string format_scalar(const QuadraticScalar& x) {
  std::string out = format_rational(x.rational_part());
  if (x.is_rational()) return out;
  const Rational& q = x.surd_coefficient();
  out += q < 0 ? "-" : "+";
  out += format_rational(abs(q)) + "*sqrt(" + std::to_string(x.radicand()) + ")";
  return out;
}

std::string format_exact(const Real& x) {
  if (x.is_exact()) return format_scalar(x.exact());
  const Interval& i = *x.interval();
  return "[" + format_rational(i.lo()) + "," + format_rational(i.hi()) + "]";
}

std::string to_decimal(const QuadraticScalar& x, int digits) {
  if (x.is_zero()) return "0";
  const bool negative = x.sign() < 0;
  const QuadraticScalar v = x.abs();
  long e = decimal_exponent(v);
  const long shift = digits - 1 - e;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  const QuadraticScalar scaled = shift >= 0 ? v * QuadraticScalar(scale) : v / QuadraticScalar(scale);
  BigInt m = (scaled + QuadraticScalar(Rational(1, 2))).floor();
  std::string s = digits_of(m);
  if (static_cast<int>(s.size()) > digits) {
    s.pop_back();
    ++e;
  }
  std::string out = negative ? "-" : "";
  if (e >= -6 && e < digits) {
    if (e >= 0) {
      out += s.substr(0, static_cast<std::size_t>(e + 1));
      std::string frac = s.substr(static_cast<std::size_t>(e + 1));
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      if (!frac.empty()) out += "." + frac;
    } else {
      std::string frac = std::string(static_cast<std::size_t>(-e - 1), '0') + s;
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      out += "0." + frac;
    }
    return out;
  }
  std::string mant = s.substr(1);
  while (!mant.empty() && mant.back() == '0') mant.pop_back();
  out += s.substr(0, 1);
  if (!mant.empty()) out += "." + mant;
  out += "e" + std::to_string(e);
  return out;
}

std::string to_decimal(const Real& x, int digits) {
  if (x.is_exact()) return to_decimal(x.exact(), digits);
  return to_decimal(QuadraticScalar(x.interval()->midpoint()), digits);
}

}  // namespace relorbit::exact_numbers
