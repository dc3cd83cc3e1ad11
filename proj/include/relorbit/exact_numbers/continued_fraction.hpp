#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "relorbit/exact_numbers/real_spec.hpp"

namespace relorbit::exact_numbers {

struct Convergent {
  std::size_t k;
  BigInt a;
  BigInt p;
  BigInt q;
};

std::vector<BigInt> cf_expand(const RealSpec& x, std::size_t depth);
// Convergents k = 0..depth.
std::vector<Convergent> convergents(const RealSpec& x, std::size_t depth);
// Convergents for an explicit quotient list.
std::vector<Convergent> convergents_of(const std::vector<BigInt>& quotients);

// ||x|| = min({x}, 1 - {x}).
QuadraticScalar dist_nearest(const QuadraticScalar& x);
Real dist_nearest(const Real& x);

// ||q_k x||: exact for quadratic x, a validated enclosure for streams
// (no wider than 2^-bits when bits > 0).
Real norm_qalpha(const RealSpec& x, std::size_t k, unsigned bits = 0);
// q_k ||q_k x||.
Real approx_quality(const RealSpec& x, std::size_t k);

struct BadlyApproxEvidence {
  BigInt bound;
  std::size_t depth;
};
struct WellApproxEvidence {
  std::size_t index;  // first i with a_i > K
  BigInt quotient;
};
using ApproximabilityVerdict = std::variant<BadlyApproxEvidence, WellApproxEvidence>;

// Depth-bounded evidence only: finitely many quotients never decide the property.
ApproximabilityVerdict badly_approximable_to_depth(const RealSpec& x, std::size_t depth, const BigInt& bound);

// The badly/well approximable class is unchanged by x -> 1/x, x -> {x} and
// other unimodular Moebius maps, so callers may feed any of these; no
// canonical choice is made here.
inline constexpr const char* kNormalizationNote =
    "approximability is invariant under x -> 1/x and x -> {x}; the input is used as given";

}  // namespace relorbit::exact_numbers
