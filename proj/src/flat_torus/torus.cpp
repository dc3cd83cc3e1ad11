#include "relorbit/flat_torus/torus.hpp"

#include "relorbit/error.hpp"

namespace relorbit::flat_torus {
namespace {
constexpr const char* kModule = "flat_torus";
}

NormalizedTorus::NormalizedTorus(QuadraticScalar a, RealSpec alpha) : a_(std::move(a)), alpha_(std::move(alpha)) {
  if (a_.sign() <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "torus modulus a must be positive");
}

TorusFrame NormalizedTorus::frame(unsigned bits) const { return TorusFrame(*this, bits); }

TorusFrame::TorusFrame(const NormalizedTorus& torus, unsigned bits)
    : torus_(torus), a_(torus.a()), alpha_(torus.alpha().approximate(bits)), bits_(bits) {}

std::pair<Real, Real> TorusFrame::lattice_coords(const Vec2& point) const {
  Real t = point.x / a_;
  Real s = point.y - t * alpha_;
  return {std::move(s), std::move(t)};
}

Vec2 TorusFrame::corner(int index) const {
  const auto [s, t] = corner_coords(index);
  return lattice_point(Real(s), Real(t));
}

std::pair<BigInt, BigInt> corner_coords(int anchor) {
  switch (anchor) {
    case 0: return {0, 0};
    case 1: return {1, 0};
    case 2: return {0, 1};
    case 3: return {1, 1};
    default: throw Error(ErrorCode::InvalidArgument, kModule, "anchor must be 0..3");
  }
}

HorizontalSlit make_horizontal_slit(QuadraticScalar N) {
  if (N.sign() <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "slit parameter N must be positive");
  return HorizontalSlit{std::move(N)};
}

Segment lift(const TorusFrame& frame, const HorizontalSlit& slit) {
  return Segment{0, 0, Vec2{Real(slit.N) * frame.a(), Real(0)}};
}

Segment lift(const TorusFrame&, const ShortSlit& slit) {
  auto [s, t] = corner_coords(slit.anchor);
  return Segment{std::move(s), std::move(t), slit.vector};
}

Vec2 second_point(const TorusFrame& frame, const HorizontalSlit& slit) {
  return Vec2{Real(slit.N) * frame.a(), Real(0)};
}

Vec2 start_point(const TorusFrame& frame, const Segment& segment) {
  return frame.lattice_point(Real(segment.s0), Real(segment.t0));
}

Vec2 end_point(const TorusFrame& frame, const Segment& segment) {
  return start_point(frame, segment) + segment.vector;
}

std::pair<Real, Real> cover_project(const Real& s, const Real& t) { return {s.frac(), t.frac()}; }

std::vector<Real> rotation_orbit(const TorusFrame& frame, std::size_t n) {
  std::vector<Real> out;
  out.reserve(n + 1);
  out.emplace_back(0);
  const Real step = frame.alpha().frac();
  for (std::size_t k = 1; k <= n; ++k) {
    Real next = out.back() + step;
    if (next >= Real(1)) next -= Real(1);
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace relorbit::flat_torus
