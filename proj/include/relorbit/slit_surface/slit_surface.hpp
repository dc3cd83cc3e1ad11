#pragma once

#include <array>
#include <string>
#include <utility>

#include "relorbit/checkerboard/checkerboard.hpp"
#include "relorbit/flat_torus/torus.hpp"

namespace relorbit::slit_surface {

using checkerboard::Checkerboard;
using exact_numbers::QuadraticScalar;
using exact_numbers::Rational;
using exact_numbers::Real;
using flat_torus::HorizontalSlit;
using flat_torus::NormalizedTorus;
using flat_torus::Vec2;

// Shear parameters of the tremor on each copy: beta = a1 dy|T1 + a2 dy|T2.
struct TremorParam {
  QuadraticScalar a1;
  QuadraticScalar a2;

  // L(beta) = (a1 + a2) a.
  QuadraticScalar signed_mass(const QuadraticScalar& area) const { return (a1 + a2) * area; }
  // |L|(beta) = (|a1| + |a2|) a.
  QuadraticScalar total_variation(const QuadraticScalar& area) const { return (a1.abs() + a2.abs()) * area; }
};

// T1 #_I T2, both copies the same torus, sheared by the tremor.
struct ELocusSurface {
  NormalizedTorus torus;
  HorizontalSlit slit;
  TremorParam tremor;
};

ELocusSurface make_surface(NormalizedTorus torus, QuadraticScalar N, TremorParam tremor = {});

struct PeriodTuple {
  Vec2 gamma1;
  Vec2 delta1;
  Vec2 gamma2;
  Vec2 delta2;
  Vec2 J;

  std::array<const Vec2*, 5> components() const { return {&gamma1, &delta1, &gamma2, &delta2, &J}; }
};

// Structural equality; false whenever an enclosure is involved.
bool exactly_equal(const PeriodTuple& p, const PeriodTuple& q);
// det(delta_i, gamma_i) = a for copy i = 1, 2.
Real copy_area(const PeriodTuple& t, int copy);

// Coordinates are exact for quadratic alpha and enclosures at `bits` otherwise.
PeriodTuple period_tuple(const ELocusSurface& surface, unsigned bits = 256);

class Matrix2 {
 public:
  // Throws NonUnimodular unless ad - bc = 1.
  Matrix2(QuadraticScalar a, QuadraticScalar b, QuadraticScalar c, QuadraticScalar d);
  static Matrix2 identity();
  // u_s = [[1, s], [0, 1]].
  static Matrix2 horocycle(const QuadraticScalar& s);
  // g = diag(lambda, 1/lambda), lambda = e^s > 0.
  static Matrix2 geodesic(const QuadraticScalar& lambda);

  const QuadraticScalar& operator()(int row, int col) const { return m_[static_cast<std::size_t>(2 * row + col)]; }
  Vec2 operator*(const Vec2& v) const;
  Matrix2 operator*(const Matrix2& o) const;

 private:
  std::array<QuadraticScalar, 4> m_;
};

PeriodTuple apply_gl(const Matrix2& g, const PeriodTuple& t);
PeriodTuple apply_gl(const Matrix2& g, const ELocusSurface& surface);

// Slit length N a + t. SingularityCollision when t <= -N a.
ELocusSurface rel(const ELocusSurface& surface, const QuadraticScalar& t);
// Tuple level: J + (t, 0). SingularityCollision if J would vanish.
PeriodTuple rel(const PeriodTuple& tuple, const Real& t);

// Lower end of the open interval (lower, +inf) of t with rel(surface, t) defined.
QuadraticScalar rel_defined_lower(const ELocusSurface& surface);

ELocusSurface tremor(const ELocusSurface& surface, const TremorParam& c);
// Tuple level: shear copy i by c_i; J must be horizontal.
PeriodTuple tremor(const PeriodTuple& tuple, const TremorParam& c);

// Re-slit along I' = reduce_slit(I) and mix the absolute periods with theta = B2/a:
// gamma1 -> (1 - theta) u_{a1} gamma + theta u_{a2} gamma, gamma2 with the roles swapped.
PeriodTuple canonical_tuple(const ELocusSurface& surface, const Checkerboard& cb, unsigned bits = 256);
PeriodTuple canonical_tuple(const ELocusSurface& surface, unsigned bits = 256);

// Minimum over copy swap, J -> -J and J + 2(e1 gamma1 + e2 delta1), e in {0,1}^2,
// of the sup-norm distance of the ten coordinates.
double stratum_pseudodistance(const PeriodTuple& p, const PeriodTuple& q);

// (B2 / a) |a1 - a2|.
Real tremor_holonomy_gap(const ELocusSurface& surface, const Checkerboard& cb);

}  // namespace relorbit::slit_surface
