#include "relorbit/exact_numbers/continued_fraction.hpp"

#include "relorbit/error.hpp"

namespace relorbit::exact_numbers {
namespace {

constexpr const char* kModule = "exact_numbers";

unsigned bit_length(const BigInt& n) { return static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2)); }

}  // namespace

std::vector<BigInt> cf_expand(const RealSpec& x, std::size_t depth) {
  if (depth == 0) throw Error(ErrorCode::DepthZero, kModule, "depth must be >= 1");
  return x.quotients(depth);
}

std::vector<Convergent> convergents_of(const std::vector<BigInt>& quotients) {
  std::vector<Convergent> out;
  out.reserve(quotients.size());
  BigInt p_prev = 1, q_prev = 0;
  BigInt p_prev2 = 0, q_prev2 = 1;
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    const BigInt& a = quotients[k];
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
    out.push_back({k, a, std::move(p), std::move(q)});
  }
  return out;
}

std::vector<Convergent> convergents(const RealSpec& x, std::size_t depth) {
  return convergents_of(x.quotients(depth));
}

QuadraticScalar dist_nearest(const QuadraticScalar& x) {
  const QuadraticScalar f = x.frac();
  return min(f, QuadraticScalar(1) - f);
}

Real dist_nearest(const Real& x) {
  if (x.is_exact()) return Real(dist_nearest(x.exact()));
  const Real f = x.frac();
  return min(f, Real(1) - f);
}

Real norm_qalpha(const RealSpec& x, std::size_t k, unsigned bits) {
  if (x.is_quadratic()) {
    const auto conv = convergents(x, k + 1);
    return Real(dist_nearest(QuadraticScalar(conv[k].q) * x.value()));
  }
  const auto head = convergents(x, k + 1);
  const BigInt& qk = head[k].q;
  const BigInt& qk1 = head[k + 1].q;
  Rational max_width(BigInt(2), qk * qk1);
  if (bits > 0) {
    BigInt den(1);
    den <<= bits;
    max_width = std::min(max_width, Rational(BigInt(1), den));
  }
  const std::optional<std::size_t> known = x.known_depth();
  // Enclose x between consecutive convergents m, m+1 and shrink until the
  // image under q_k is narrow enough and its fractional part is decided.
  for (std::size_t m = k;; ++m) {
    const bool last = known && m + 1 >= *known;
    const auto conv = convergents(x, m + 1);
    const Convergent& c0 = conv[m];
    const Convergent& c1 = conv[m + 1];
    Rational lo(c0.p, c0.q), hi(c1.p, c1.q);
    lo.canonicalize();
    hi.canonicalize();
    if (lo > hi) std::swap(lo, hi);
    const Rational width = Rational(qk) * (hi - lo);
    if (width > max_width && !last) continue;
    const unsigned prec = 2 * bit_length(c1.q) + 64;
    try {
      Real value = dist_nearest(Real(Interval(lo, hi, prec)) * Real(qk));
      if (k == 0) return value;
      // Refine until strictly inside 1/(q_{k+1}+q_k) < ||q_k x|| < 1/q_{k+1}.
      const Interval& iv = *value.interval();
      const Rational lower(BigInt(1), qk1 + qk);
      const Rational upper(BigInt(1), qk1);
      if (iv.lo() > lower && iv.hi() < upper) return value;
      if (last) {
        return Real(Interval(std::max(iv.lo(), lower), std::min(iv.hi(), upper), prec));
      }
    } catch (const PrecisionExhausted&) {
      if (last) throw;
    }
  }
}

Real approx_quality(const RealSpec& x, std::size_t k) {
  const auto conv = convergents(x, k);
  return Real(conv[k].q) * norm_qalpha(x, k);
}

ApproximabilityVerdict badly_approximable_to_depth(const RealSpec& x, std::size_t depth, const BigInt& bound) {
  if (depth == 0) throw Error(ErrorCode::DepthZero, kModule, "depth must be >= 1");
  const auto a = x.quotients(depth);
  for (std::size_t i = 1; i <= depth; ++i) {
    if (a[i] > bound) return WellApproxEvidence{i, a[i]};
  }
  return BadlyApproxEvidence{bound, depth};
}

}  // namespace relorbit::exact_numbers
