#pragma once

#include "relorbit/flat_torus/torus.hpp"

namespace relorbit::flat_torus {

// gamma: vertical loop, lifts x = n a.  delta: loop along (a,alpha), lifts y = (alpha/a) x - m.
enum class Generator { Gamma, Delta };

// Lines crossed by a lift: values first .. first + count - 1 of the line
// coordinate c (x/a for gamma, y - (alpha/a) x for delta; lines sit at integer c).
// A line counts when lo <= c < hi over the segment's range [lo, hi]: the left
// end of a horizontal slit counts for gamma, its left end does not count for
// delta. Both families are effectively pushed off the marked points the same
// way, so parity depends only on the class of the segment.
struct CrossingRange {
  BigInt first;
  BigInt count;
};

CrossingRange crossing_range(const TorusFrame& frame, const Segment& segment, Generator generator);
// Walks the crossed lines one by one, checking each against the segment.
std::vector<BigInt> enumerate_crossings(const TorusFrame& frame, const Segment& segment, Generator generator);
int intersection_parity(const TorusFrame& frame, const Segment& segment, Generator generator);

}  // namespace relorbit::flat_torus
