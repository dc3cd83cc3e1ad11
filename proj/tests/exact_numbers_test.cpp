#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "relorbit/error.hpp"
#include "relorbit/exact_numbers/continued_fraction.hpp"
#include "relorbit/exact_numbers/precision.hpp"
#include "relorbit/exact_numbers/scalar_format.hpp"

using namespace relorbit;
using namespace relorbit::exact_numbers;

namespace {

// Independent numeric path: GMP floats at 2048 bits.
mpf_class approx(const QuadraticScalar& x) {
  mpf_class p(x.rational_part(), 2048);
  if (x.is_rational()) return p;
  mpf_class s(x.radicand(), 2048);
  s = sqrt(s);
  return p + mpf_class(x.surd_coefficient(), 2048) * s;
}

mpf_class value_from_quotients(const std::vector<BigInt>& qs) {
  mpf_class v(qs.back(), 2048);
  for (std::size_t i = qs.size() - 1; i-- > 0;) v = mpf_class(qs[i], 2048) + 1 / v;
  return v;
}

mpf_class dist_int(const mpf_class& x) {
  mpf_class f = x - floor(x);
  mpf_class g = 1 - f;
  return f < g ? f : g;
}

// Denominators at which ||q x|| reaches a new minimum, q = 1..limit.
std::vector<long> record_denominators(const mpf_class& x, long limit) {
  std::vector<long> out;
  mpf_class best(2, 2048);
  for (long q = 1; q <= limit; ++q) {
    mpf_class d = dist_int(x * q);
    if (d < best) {
      best = d;
      out.push_back(q);
    }
  }
  return out;
}

const QuadraticScalar kGolden(Rational(-1, 2), Rational(1, 2), 5);

}  // namespace

TEST_CASE("quadratic arithmetic matches a floating oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 17);
  for (long d : {2L, 3L, 5L, 7L}) {
    for (int i = 0; i < 200; ++i) {
      QuadraticScalar x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
      QuadraticScalar y(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
      const mpf_class ax = approx(x), ay = approx(y);
      CHECK(x.sign() == sgn(ax));
      CHECK(approx(x * y) - ax * ay < mpf_class(1e-300));
      CHECK(abs(approx(x + y) - (ax + ay)) < mpf_class(1e-300));
      CHECK(mpz_class(x.floor()) == mpz_class(floor(ax)));
      if (!y.is_zero()) CHECK(abs(approx(x / y) - ax / ay) < mpf_class(1e-280));
    }
  }
}

TEST_CASE("sign is exact near cancellation") {
  // 1393/985 is a convergent of sqrt 2 from below; the difference is ~3.6e-7.
  const QuadraticScalar d = QuadraticScalar::sqrt(2) - QuadraticScalar(Rational(1393, 985));
  CHECK(d.sign() > 0);
  CHECK((QuadraticScalar(Rational(3363, 2378)) - QuadraticScalar::sqrt(2)).sign() > 0);
  CHECK(QuadraticScalar(Rational(0), Rational(3), 12) == QuadraticScalar(Rational(0), Rational(6), 3));
}

TEST_CASE("mixing radicands is rejected") {
  CHECK_THROWS_AS(QuadraticScalar::sqrt(2) + QuadraticScalar::sqrt(3), Error);
  CHECK_THROWS_AS(QuadraticScalar(1) / QuadraticScalar(0), Error);
}

TEST_CASE("intervals refuse undecidable comparisons") {
  const Interval i(Rational(-1, 1000), Rational(1, 1000), 64);
  CHECK_THROWS_AS(i.sign(), PrecisionExhausted);
  const Real x(QuadraticScalar::sqrt(2));
  CHECK((Real(x.enclosure(200)) - x).interval() != nullptr);
  CHECK_THROWS_AS(compare(Real(x.enclosure(200)), x), PrecisionExhausted);
}

TEST_CASE("scalar parsing round trips") {
  for (const char* s : {"3", "-7/4", "1/2+3/2*sqrt(5)", "-1+sqrt(2)"}) {
    CHECK(parse_scalar(format_scalar(parse_scalar(s))) == parse_scalar(s));
  }
  CHECK(parse_scalar("-1/2+1/2*sqrt(5)") == kGolden);
  CHECK(parse_scalar("sqrt(5)/2-1/2") == kGolden);
  CHECK(parse_scalar("1.25") == QuadraticScalar(Rational(5, 4)));
  CHECK_THROWS_AS(parse_scalar("sqrt("), Error);
  CHECK(to_decimal(QuadraticScalar(Rational(1, 3)), 5) == "0.33333");
}

TEST_CASE("quadratic specs reject rationals") {
  try {
    RealSpec::quadratic(QuadraticScalar(Rational(1, 2)));
    FAIL("expected RationalInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RationalInput);
  }
}

TEST_CASE("expansions of the figure examples") {
  std::vector<BigInt> golden = cf_expand(RealSpec::builtin("golden"), 6);
  CHECK(golden == std::vector<BigInt>{0, 1, 1, 1, 1, 1, 1});
  std::vector<BigInt> s2 = cf_expand(RealSpec::builtin("sqrt2m1"), 5);
  CHECK(s2 == std::vector<BigInt>{0, 2, 2, 2, 2, 2});
  std::vector<BigInt> p2 = cf_expand(RealSpec::builtin("pow2"), 4);
  CHECK(p2 == std::vector<BigInt>{0, 2, 4, 8, 16});
  CHECK(cf_expand(RealSpec::builtin("sqrt3m1"), 4) == std::vector<BigInt>{0, 1, 2, 1, 2});
  CHECK(cf_expand(RealSpec::builtin("factorial"), 4) == std::vector<BigInt>{0, 1, 2, 6, 24});
  CHECK_THROWS_AS(cf_expand(RealSpec::builtin("golden"), 0), Error);
  // An eventually periodic expansion other than the builtins.
  CHECK(cf_expand(RealSpec::parse("sqrt(7)"), 8) == std::vector<BigInt>{2, 1, 1, 1, 4, 1, 1, 1, 4});
}

TEST_CASE("convergents are best approximants") {
  for (const char* id : {"golden", "sqrt2m1", "sqrt3m1"}) {
    const RealSpec x = RealSpec::builtin(id);
    const std::vector<Convergent> conv = convergents(x, 12);
    const std::vector<long> records = record_denominators(approx(x.value()), conv.back().q.get_si());
    std::vector<long> qs;
    for (const Convergent& c : conv) {
      if (qs.empty() || qs.back() != c.q.get_si()) qs.push_back(c.q.get_si());
    }
    CHECK(records == qs);
  }
  std::vector<long> fib;
  for (const Convergent& c : convergents(RealSpec::builtin("golden"), 6)) fib.push_back(c.q.get_si());
  CHECK(fib == std::vector<long>{1, 1, 2, 3, 5, 8, 13});
  std::vector<long> pell;
  for (const Convergent& c : convergents(RealSpec::builtin("sqrt2m1"), 4)) pell.push_back(c.q.get_si());
  CHECK(pell == std::vector<long>{1, 2, 5, 12, 29});
}

TEST_CASE("convergent recurrences and coprimality") {
  for (const std::string& id : RealSpec::builtin_ids()) {
    const std::vector<Convergent> c = convergents(RealSpec::builtin(id), 20);
    CHECK(c[0].p == c[0].a);
    CHECK(c[0].q == 1);
    for (std::size_t k = 2; k < c.size(); ++k) {
      CHECK(c[k].p == c[k].a * c[k - 1].p + c[k - 2].p);
      CHECK(c[k].q == c[k].a * c[k - 1].q + c[k - 2].q);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), c[k].p.get_mpz_t(), c[k].q.get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("distance to the nearest integer") {
  CHECK(dist_nearest(QuadraticScalar(Rational(5, 2))) == QuadraticScalar(Rational(1, 2)));
  CHECK(dist_nearest(QuadraticScalar(7)) == QuadraticScalar(0));
  const QuadraticScalar n5 = dist_nearest(QuadraticScalar(5) * kGolden);
  CHECK(n5 == QuadraticScalar(Rational(-11, 2), Rational(5, 2), 5));
  CHECK(abs(approx(n5) - abs(approx(kGolden) * 5 - 3)) < mpf_class(1e-300));
  CHECK(n5.to_double() == doctest::Approx(0.0901699).epsilon(1e-6));
}

TEST_CASE("norm of q_k alpha") {
  const RealSpec g = RealSpec::builtin("golden");
  // q_4 = 5.
  const Real n4 = norm_qalpha(g, 4);
  CHECK(n4.exact() == QuadraticScalar(Rational(-11, 2), Rational(5, 2), 5));
  CHECK(n4 > Real(Rational(1, 13)));
  CHECK(n4 < Real(Rational(1, 8)));
  CHECK(norm_qalpha(g, 0).exact() == QuadraticScalar(Rational(3, 2), Rational(-1, 2), 5));

  const RealSpec p2 = RealSpec::builtin("pow2");
  const std::vector<Convergent> c = convergents(p2, 12);
  const mpf_class x = value_from_quotients(cf_expand(p2, 40));
  for (std::size_t k = 1; k <= 10; ++k) {
    const Real n = norm_qalpha(p2, k);
    const Interval* iv = n.interval();
    REQUIRE(iv != nullptr);
    CHECK(iv->width() <= Rational(BigInt(2), BigInt(c[k].q * c[k + 1].q)));
    const mpf_class oracle = dist_int(x * mpf_class(c[k].q, 2048));
    CHECK(mpf_class(iv->lo(), 2048) <= oracle);
    CHECK(oracle <= mpf_class(iv->hi(), 2048));
  }
}

TEST_CASE("Khinchin sandwich") {
  for (const std::string& id : RealSpec::builtin_ids()) {
    const RealSpec x = RealSpec::builtin(id);
    const std::size_t depth = id == "factorial" ? 12 : 25;
    const std::vector<Convergent> c = convergents(x, depth + 1);
    for (std::size_t k = 1; k <= depth; ++k) {
      const Real n = norm_qalpha(x, k);
      CHECK(Real(Rational(BigInt(1), BigInt(c[k + 1].q + c[k].q))) < n);
      CHECK(n < Real(Rational(BigInt(1), c[k + 1].q)));
    }
  }
}

TEST_CASE("approximability evidence") {
  const ApproximabilityVerdict g = badly_approximable_to_depth(RealSpec::builtin("golden"), 25, 1);
  REQUIRE(std::holds_alternative<BadlyApproxEvidence>(g));
  CHECK(std::get<BadlyApproxEvidence>(g).depth == 25);
  const ApproximabilityVerdict p = badly_approximable_to_depth(RealSpec::builtin("pow2"), 10, 100);
  REQUIRE(std::holds_alternative<WellApproxEvidence>(p));
  CHECK(std::get<WellApproxEvidence>(p).index == 7);
  CHECK(std::get<WellApproxEvidence>(p).quotient == 128);

  double c = 1;
  std::size_t at = 0;
  for (std::size_t k = 0; k <= 25; ++k) {
    const double v = approx_quality(RealSpec::builtin("golden"), k).to_double();
    if (v < c) {
      c = v;
      at = k;
    }
  }
  CHECK(c == doctest::Approx(0.381966).epsilon(1e-6));
  CHECK(at <= 1);
}

TEST_CASE("precision escalation") {
  int calls = 0;
  const unsigned bits = with_precision([&](unsigned b) {
    ++calls;
    if (b < 512) throw PrecisionExhausted("test", "not yet");
    return b;
  });
  CHECK(bits == 512);
  CHECK(calls == 3);
}
