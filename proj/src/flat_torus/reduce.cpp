#include "relorbit/flat_torus/reduce.hpp"

#include "relorbit/error.hpp"
#include "relorbit/exact_numbers/precision.hpp"
#include "relorbit/flat_torus/arrangement.hpp"

namespace relorbit::flat_torus {
namespace {

constexpr const char* kModule = "flat_torus";

bool same_parities(const TorusFrame& frame, const Segment& a, const Segment& b) {
  return intersection_parity(frame, a, Generator::Gamma) == intersection_parity(frame, b, Generator::Gamma) &&
         intersection_parity(frame, a, Generator::Delta) == intersection_parity(frame, b, Generator::Delta);
}

}  // namespace

Vec2 right_endpoint_lift(const TorusFrame& frame, const HorizontalSlit& slit) {
  // p2 = (N a, 0) = -N alpha (0,1) + N (a, alpha); reduce the t-coordinate into (0,1]
  // and the s-coordinate into [0,1).
  const QuadraticScalar x = slit.N - QuadraticScalar(slit.N.ceil()) + QuadraticScalar(1);
  const Real y = (-(Real(slit.N) * frame.alpha())).frac();
  return frame.lattice_point(y, Real(x));
}

std::vector<ShortSlit> candidate_slits(const TorusFrame& frame, const HorizontalSlit& slit) {
  const Vec2 p2 = right_endpoint_lift(frame, slit);
  std::vector<ShortSlit> out;
  for (int anchor = 0; anchor < 4; ++anchor) out.push_back(ShortSlit{p2 - frame.corner(anchor), anchor});
  return out;
}

ShortSlit reduce_slit(const TorusFrame& frame, const HorizontalSlit& slit) {
  const Segment long_lift = lift(frame, slit);
  std::vector<ShortSlit> matches;
  for (ShortSlit& c : candidate_slits(frame, slit)) {
    if (same_parities(frame, long_lift, lift(frame, c))) matches.push_back(std::move(c));
  }
  if (matches.empty()) throw Error(ErrorCode::NoCandidate, kModule, "no corner candidate matches both parities");
  if (matches.size() > 1) {
    throw Error(ErrorCode::MultipleCandidates, kModule, "several corner candidates match both parities");
  }
  // Shifting by 2(0,1) keeps the class; bring dy into (-1, 1].
  Vec2 v = matches.front().vector;
  const BigInt k = ((v.y - Real(1)) / Real(2)).ceil();
  v.y -= Real(BigInt(2 * k));
  int anchor;
  const int sx = v.x.sign();
  const int sy = v.y.sign();
  if (sx > 0) {
    anchor = sy >= 0 ? 0 : 1;
  } else if (sx < 0) {
    anchor = sy >= 0 ? 2 : 3;
  } else {
    anchor = sy > 0 ? 0 : 1;
  }
  ShortSlit out{std::move(v), anchor};
  if (!same_parities(frame, long_lift, lift(frame, out))) {
    throw Error(ErrorCode::NoCandidate, kModule, "normalized candidate lost its parity");
  }
  return out;
}

ShortSlit reduce_slit(const NormalizedTorus& torus, const HorizontalSlit& slit) {
  return exact_numbers::with_precision([&](unsigned bits) { return reduce_slit(torus.frame(bits), slit); });
}

bool homologous_mod2(const TorusFrame& frame, const HorizontalSlit& marked, const Segment& seg1,
                     const Segment& seg2) {
  if (seg1.s0 == seg2.s0 && seg1.t0 == seg2.t0) {
    const bool same_x = seg1.vector.x.is_exact() && seg2.vector.x.is_exact() &&
                        seg1.vector.x.exact() == seg2.vector.x.exact();
    const bool same_y = seg1.vector.y.is_exact() && seg2.vector.y.is_exact() &&
                        seg1.vector.y.exact() == seg2.vector.y.exact();
    if (same_x && same_y) return true;
  }
  const Arrangement arrangement(frame, marked, {seg1, seg2});
  return arrangement.consistent();
}

}  // namespace relorbit::flat_torus
