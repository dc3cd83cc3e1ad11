#include "relorbit/exact_numbers/real_spec.hpp"

#include <algorithm>
#include <cctype>

#include "relorbit/error.hpp"
#include "relorbit/exact_numbers/scalar_format.hpp"

namespace relorbit::exact_numbers {
namespace {

constexpr const char* kModule = "exact_numbers";

BigInt factorial(std::size_t k) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

BigInt power_of_two(std::size_t k) {
  BigInt out = 1;
  out <<= k;
  return out;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

struct RealSpec::Impl {
  std::string name;
  std::optional<QuadraticScalar> value;
  BigInt a0;
  QuotientFn quotient;
  std::optional<std::vector<BigInt>> finite;

  BigInt partial_quotient(std::size_t k) const {
    if (k == 0) return a0;
    if (finite) {
      if (k >= finite->size()) {
        throw Error(ErrorCode::DepthExceeded, kModule,
                    "stream '" + name + "' has only " + std::to_string(finite->size() - 1) + " quotients");
      }
      return (*finite)[k];
    }
    BigInt a = quotient(k);
    if (a < 1) throw Error(ErrorCode::InvalidArgument, kModule, "partial quotient < 1 in stream '" + name + "'");
    return a;
  }
};

RealSpec RealSpec::quadratic(QuadraticScalar value, std::string name) {
  if (value.is_rational()) {
    throw Error(ErrorCode::RationalInput, kModule, "value " + format_scalar(value) + " is rational");
  }
  auto impl = std::make_shared<Impl>();
  impl->name = name.empty() ? format_scalar(value) : std::move(name);
  impl->a0 = value.floor();
  impl->value = std::move(value);
  return RealSpec(std::move(impl));
}

RealSpec RealSpec::stream(BigInt a0, QuotientFn quotient, std::string name) {
  if (a0 < 0) throw Error(ErrorCode::InvalidArgument, kModule, "stream a0 must be >= 0");
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->a0 = std::move(a0);
  impl->quotient = std::move(quotient);
  return RealSpec(std::move(impl));
}

RealSpec RealSpec::finite_stream(std::vector<BigInt> quotients, std::string name) {
  if (quotients.empty()) throw Error(ErrorCode::EmptyInput, kModule, "empty quotient list");
  if (quotients[0] < 0) throw Error(ErrorCode::InvalidArgument, kModule, "stream a0 must be >= 0");
  for (std::size_t i = 1; i < quotients.size(); ++i) {
    if (quotients[i] < 1) throw Error(ErrorCode::InvalidArgument, kModule, "partial quotient < 1");
  }
  auto impl = std::make_shared<Impl>();
  if (name.empty()) {
    name = "[" + quotients[0].get_str() + ";";
    for (std::size_t i = 1; i < quotients.size(); ++i) {
      name += (i > 1 ? "," : "") + quotients[i].get_str();
    }
    name += "]";
  }
  impl->name = std::move(name);
  impl->a0 = quotients[0];
  impl->finite = std::move(quotients);
  return RealSpec(std::move(impl));
}

const std::vector<std::string>& RealSpec::builtin_ids() {
  static const std::vector<std::string> ids = {"golden", "sqrt2m1", "sqrt3m1", "pow2", "factorial"};
  return ids;
}

RealSpec RealSpec::builtin(std::string_view id) {
  if (id == "golden") return quadratic(QuadraticScalar(Rational(-1, 2), Rational(1, 2), 5), "golden");
  if (id == "sqrt2m1") return quadratic(QuadraticScalar(Rational(-1), Rational(1), 2), "sqrt2m1");
  if (id == "sqrt3m1") return quadratic(QuadraticScalar(Rational(-1), Rational(1), 3), "sqrt3m1");
  if (id == "pow2") return stream(0, power_of_two, "pow2");
  if (id == "factorial") return stream(0, factorial, "factorial");
  throw Error(ErrorCode::InvalidArgument, kModule, "unknown builtin '" + std::string(id) + "'");
}

RealSpec RealSpec::parse(std::string_view text) {
  const std::string s = trim(text);
  if (std::find(builtin_ids().begin(), builtin_ids().end(), s) != builtin_ids().end()) return builtin(s);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::ParseError, kModule, "unterminated quotient list '" + s + "'");
    std::vector<BigInt> qs;
    std::string token;
    for (std::size_t i = 1; i + 1 < s.size() + 1; ++i) {
      const char c = s[i];
      if (c == ';' || c == ',' || c == ']') {
        if (token.empty()) throw Error(ErrorCode::ParseError, kModule, "empty entry in '" + s + "'");
        if (c == ';' && !qs.empty()) throw Error(ErrorCode::ParseError, kModule, "misplaced ';' in '" + s + "'");
        try {
          qs.emplace_back(token);
        } catch (const std::invalid_argument&) {
          throw Error(ErrorCode::ParseError, kModule, "bad integer '" + token + "'");
        }
        token.clear();
        if (c == ']') break;
      } else {
        token.push_back(c);
      }
    }
    return finite_stream(std::move(qs));
  }
  return quadratic(parse_scalar(s), s);
}

bool RealSpec::is_quadratic() const { return impl_->value.has_value(); }

const QuadraticScalar& RealSpec::value() const {
  if (!impl_->value) throw Error(ErrorCode::InvalidArgument, kModule, "'" + impl_->name + "' is a quotient stream");
  return *impl_->value;
}

const std::string& RealSpec::name() const { return impl_->name; }

std::optional<std::size_t> RealSpec::known_depth() const {
  if (impl_->finite) return impl_->finite->size() - 1;
  return std::nullopt;
}

std::vector<BigInt> RealSpec::quotients(std::size_t depth) const {
  std::vector<BigInt> out;
  out.reserve(depth + 1);
  if (impl_->value) {
    QuadraticScalar x = *impl_->value;
    for (std::size_t k = 0; k <= depth; ++k) {
      BigInt a = x.floor();
      out.push_back(a);
      if (k < depth) x = QuadraticScalar(1) / (x - QuadraticScalar(a));
    }
    return out;
  }
  for (std::size_t k = 0; k <= depth; ++k) out.push_back(impl_->partial_quotient(k));
  return out;
}

Real RealSpec::approximate(unsigned bits) const {
  if (impl_->value) return Real(*impl_->value);
  BigInt target = 1;
  target <<= bits;
  BigInt p_prev = 1, q_prev = 0;
  BigInt p = impl_->a0, q = 1;
  for (std::size_t m = 1;; ++m) {
    if (impl_->finite && m >= impl_->finite->size()) {
      if (m == 1) return Real(Interval(Rational(p), Rational(p + 1), bits));
      Rational x(p, q), y(p_prev, q_prev);
      x.canonicalize();
      y.canonicalize();
      return Real(Interval(std::min(x, y), std::max(x, y), bits));
    }
    const BigInt a = impl_->partial_quotient(m);
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    if (q_prev * q >= target) {
      Rational x(p, q), y(p_prev, q_prev);
      x.canonicalize();
      y.canonicalize();
      return Real(Interval(std::min(x, y), std::max(x, y), bits));
    }
  }
}

}  // namespace relorbit::exact_numbers
