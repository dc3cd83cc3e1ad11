#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relorbit/flat_torus/reduce.hpp"
#include "relorbit/flat_torus/torus.hpp"

namespace relorbit::checkerboard {

using exact_numbers::BigInt;
using exact_numbers::QuadraticScalar;
using exact_numbers::Rational;
using exact_numbers::Real;
using flat_torus::HorizontalSlit;
using flat_torus::NormalizedTorus;
using flat_torus::ShortSlit;
using flat_torus::Vec2;

// A trapezoid with horizontal top and bottom, in window coordinates.
// Vertices run bottom-left, bottom-right, top-right, top-left.
struct ColoredCell {
  int color = 1;
  std::array<Vec2, 4> vertices;
  Real area;
};

struct Checkerboard {
  NormalizedTorus torus;
  HorizontalSlit slit;
  ShortSlit short_slit;
  Real a;
  Real B1;
  Real B2;
  std::optional<std::size_t> q_index;
  // Empty when the areas came from the odd-convergent closed form.
  std::vector<ColoredCell> cells;
  // Window [xi, xi + a) x [eta, eta + 1) holding the cells.
  Real xi;
  Real eta;
  bool closed_form = false;
};

Checkerboard build(const NormalizedTorus& torus, const HorizontalSlit& slit, const ShortSlit& short_slit);
// Uses reduce_slit for the short representative.
Checkerboard build(const NormalizedTorus& torus, const HorizontalSlit& slit);

// N = 2 q_k + 1 (k >= 1) without building cells: B2 = (q_k + 1/2) a ||q_k alpha||.
Checkerboard build_odd_convergent(const NormalizedTorus& torus, std::size_t k);

inline constexpr long kDefaultCellLimit = 1L << 20;
// The odd-convergent checkerboard, built cell by cell when N <= limit and from
// the closed form otherwise.
Checkerboard build_auto(const NormalizedTorus& torus, std::size_t k, long limit = kDefaultCellLimit);

// Cell-by-cell when N <= limit, the closed form for larger odd-convergent N,
// TooLarge otherwise.
Checkerboard build_limited(const NormalizedTorus& torus, const HorizontalSlit& slit, long limit = kDefaultCellLimit);

// The k >= 1 with N = 2 q_k + 1, if any.
std::optional<std::size_t> odd_convergent_index(const NormalizedTorus& torus, const QuadraticScalar& N);

// The k with q_k <= N < q_{k+1} (largest such k on ties).
std::size_t q_index(const NormalizedTorus& torus, const QuadraticScalar& N);

// |B1 - B2| / a.
Real imbalance(const Checkerboard& cb);
// (B1 - B2) / a.
Real signed_imbalance(const Checkerboard& cb);
// B2 / a.
Real exchange_proportion(const Checkerboard& cb);

struct ColorEstimate {
  double B1;
  double B2;
  double sigma;  // binomial standard error of B1 (and B2)
};
// Oracle: colors sample points by the parity of crossings of the straight path
// from the basepoint with all translates of I and I', in double precision.
ColorEstimate monte_carlo_color_areas(const NormalizedTorus& torus, const HorizontalSlit& slit,
                                      const ShortSlit& short_slit, std::size_t samples, std::uint64_t seed = 1);

std::string render_svg(const Checkerboard& cb);
std::string render_csv(const Checkerboard& cb);

}  // namespace relorbit::checkerboard
