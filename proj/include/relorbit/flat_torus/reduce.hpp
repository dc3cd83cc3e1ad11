#pragma once

#include "relorbit/flat_torus/crossings.hpp"
#include "relorbit/flat_torus/torus.hpp"

namespace relorbit::flat_torus {

// The lift of the slit's right endpoint with lattice t-coordinate in (0,1].
Vec2 right_endpoint_lift(const TorusFrame& frame, const HorizontalSlit& slit);

// The four corner-anchored candidates p~2 - corner, in anchor order.
std::vector<ShortSlit> candidate_slits(const TorusFrame& frame, const HorizontalSlit& slit);

// The short slit in the same class of H_1(T, {p1, p2}; Z/2) as the horizontal slit.
ShortSlit reduce_slit(const TorusFrame& frame, const HorizontalSlit& slit);
ShortSlit reduce_slit(const NormalizedTorus& torus, const HorizontalSlit& slit);

// True iff the complement of seg1 + seg2 (mod 2) on T admits a proper 2-coloring.
// Both segments must join the marked points p1 = 0 and p2 = (N a, 0).
bool homologous_mod2(const TorusFrame& frame, const HorizontalSlit& marked, const Segment& seg1,
                     const Segment& seg2);

}  // namespace relorbit::flat_torus
