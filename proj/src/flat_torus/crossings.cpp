#include "relorbit/flat_torus/crossings.hpp"

#include "relorbit/error.hpp"

namespace relorbit::flat_torus {
namespace {

constexpr const char* kModule = "flat_torus";

// Line coordinate at the start (a lattice point) and at the end of the segment.
std::pair<Real, Real> coordinate_range(const TorusFrame& frame, const Segment& seg, Generator g) {
  const Real run = seg.vector.x / frame.a();
  if (g == Generator::Gamma) return {Real(seg.t0), Real(seg.t0) + run};
  return {Real(seg.s0), Real(seg.s0) + seg.vector.y - frame.alpha() * run};
}

}  // namespace

CrossingRange crossing_range(const TorusFrame& frame, const Segment& segment, Generator generator) {
  if (segment.vector.x.sign() == 0 && segment.vector.y.sign() == 0) {
    throw Error(ErrorCode::DegenerateSegment, kModule, "zero-length segment");
  }
  auto [c0, c1] = coordinate_range(frame, segment, generator);
  if (generator == Generator::Delta && c1.is_exact() && c1.exact().is_rational() &&
      c1.exact().rational_part().get_den() == 1) {
    throw Error(ErrorCode::DegenerateSegment, kModule, "second endpoint lies on a delta line");
  }
  const bool forward = c0 <= c1;
  const Real& lo = forward ? c0 : c1;
  const Real& hi = forward ? c1 : c0;
  BigInt first = lo.ceil();
  BigInt count = hi.ceil() - first;
  return {std::move(first), std::move(count)};
}

std::vector<BigInt> enumerate_crossings(const TorusFrame& frame, const Segment& segment, Generator generator) {
  auto [c0, c1] = coordinate_range(frame, segment, generator);
  const Real lo = min(c0, c1);
  const Real hi = max(c0, c1);
  std::vector<BigInt> out;
  // Step through the line indices from the first one not below lo.
  BigInt c = lo.floor();
  while (Real(c) < lo) ++c;
  for (; Real(c) < hi; ++c) out.push_back(c);
  return out;
}

int intersection_parity(const TorusFrame& frame, const Segment& segment, Generator generator) {
  const CrossingRange r = crossing_range(frame, segment, generator);
  return mpz_odd_p(r.count.get_mpz_t()) ? 1 : 0;
}

}  // namespace relorbit::flat_torus
