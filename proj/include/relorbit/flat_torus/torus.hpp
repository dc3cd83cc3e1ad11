#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "relorbit/exact_numbers/continued_fraction.hpp"
#include "relorbit/exact_numbers/real.hpp"
#include "relorbit/exact_numbers/real_spec.hpp"

namespace relorbit::flat_torus {

using exact_numbers::BigInt;
using exact_numbers::QuadraticScalar;
using exact_numbers::Rational;
using exact_numbers::Real;
using exact_numbers::RealSpec;

struct Vec2 {
  Real x;
  Real y;
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(const Real& s, const Vec2& v) { return {s * v.x, s * v.y}; }

class TorusFrame;

// R^2 / ((0,1)Z + (a,alpha)Z); area a.
class NormalizedTorus {
 public:
  NormalizedTorus(QuadraticScalar a, RealSpec alpha);

  const QuadraticScalar& a() const { return a_; }
  const RealSpec& alpha() const { return alpha_; }
  const QuadraticScalar& area() const { return a_; }

  // Concrete coordinates; alpha is exact for quadratic specs, an enclosure otherwise.
  TorusFrame frame(unsigned bits) const;

 private:
  QuadraticScalar a_;
  RealSpec alpha_;
};

class TorusFrame {
 public:
  TorusFrame(const NormalizedTorus& torus, unsigned bits);

  const NormalizedTorus& torus() const { return torus_; }
  const Real& a() const { return a_; }
  const Real& alpha() const { return alpha_; }
  unsigned bits() const { return bits_; }
  bool exact() const { return alpha_.is_exact(); }

  Vec2 lattice_point(const Real& s, const Real& t) const { return {t * a_, s + t * alpha_}; }
  // (s, t) with point = s*(0,1) + t*(a,alpha).
  std::pair<Real, Real> lattice_coords(const Vec2& point) const;
  // 0:(0,0) 1:(0,1) 2:(a,alpha) 3:(a,alpha+1)
  Vec2 corner(int index) const;

 private:
  NormalizedTorus torus_;
  Real a_;
  Real alpha_;
  unsigned bits_;
};

// Horizontal slit of length N*a starting at the origin.
struct HorizontalSlit {
  QuadraticScalar N;
};
HorizontalSlit make_horizontal_slit(QuadraticScalar N);

// Straight segment from a lift corner to a lift of the slit's right endpoint.
struct ShortSlit {
  Vec2 vector;
  int anchor = 0;
};

// A lift of a slit to the plane: starts at the lattice point s0*(0,1) + t0*(a,alpha)
// (a lift of the first marked point) and ends at a lift of the second.
struct Segment {
  BigInt s0;
  BigInt t0;
  Vec2 vector;
};

Vec2 start_point(const TorusFrame& frame, const Segment& segment);
Vec2 end_point(const TorusFrame& frame, const Segment& segment);
// Lattice coordinates (s, t) of the corner with the given anchor index.
std::pair<BigInt, BigInt> corner_coords(int anchor);

Segment lift(const TorusFrame& frame, const HorizontalSlit& slit);
Segment lift(const TorusFrame& frame, const ShortSlit& slit);
// The second marked point (N a, 0).
Vec2 second_point(const TorusFrame& frame, const HorizontalSlit& slit);

// Lattice coordinates reduced into [0,1)^2.
std::pair<Real, Real> cover_project(const Real& s, const Real& t);

// {k alpha mod 1 : k = 0..n}.
std::vector<Real> rotation_orbit(const TorusFrame& frame, std::size_t n);

}  // namespace relorbit::flat_torus
