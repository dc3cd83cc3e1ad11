#include <cmath>
#include <random>

#include "relorbit/checkerboard/checkerboard.hpp"
#include "relorbit/error.hpp"

namespace relorbit::checkerboard {
namespace {

struct P {
  double x, y;
};

double cross(P o, P a, P b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool segments_cross(P a, P b, P c, P d) {
  const double d1 = cross(a, b, c);
  const double d2 = cross(a, b, d);
  const double d3 = cross(c, d, a);
  const double d4 = cross(c, d, b);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

ColorEstimate monte_carlo_color_areas(const NormalizedTorus& torus, const HorizontalSlit& slit,
                                      const ShortSlit& short_slit, std::size_t samples, std::uint64_t seed) {
  if (samples < 10000) throw Error(ErrorCode::InvalidArgument, "checkerboard", "monte carlo needs at least 10^4 samples");
  const double a = torus.a().to_double();
  const double alpha = torus.alpha().approximate(64).to_double();
  const double N = slit.N.to_double();
  const P base{-1e-12, 1e-6};
  const auto [cs, ct] = flat_torus::corner_coords(short_slit.anchor);
  const P corner{ct.get_d() * a, cs.get_d() + ct.get_d() * alpha};
  const P v{short_slit.vector.x.to_double(), short_slit.vector.y.to_double()};

  const long s_range = 6 + static_cast<long>(std::ceil(3 * std::abs(alpha)));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t first = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const double u = unit(rng);
    const double w = unit(rng);
    const P z{w * a, u + w * alpha};
    int parity = 0;
    const double dx = z.x - base.x;
    const double dy = z.y - base.y;
    const double xmin = std::min(base.x, z.x);
    const double xmax = std::max(base.x, z.x);
    const double ymin = std::min(base.y, z.y);
    const double ymax = std::max(base.y, z.y);
    // Translates of I: y = s + t alpha, t a <= x < (t + N) a.
    if (dy != 0) {
      const long t_lo = static_cast<long>(std::floor(xmin / a - N)) - 1;
      const long t_hi = static_cast<long>(std::ceil(xmax / a)) + 1;
      for (long t = t_lo; t <= t_hi; ++t) {
        const double off = static_cast<double>(t) * alpha;
        for (long s = static_cast<long>(std::ceil(ymin - off)); static_cast<double>(s) + off < ymax; ++s) {
          const double y = static_cast<double>(s) + off;
          if (y <= ymin) continue;
          const double x = base.x + (y - base.y) / dy * dx;
          if (x >= static_cast<double>(t) * a && x < (static_cast<double>(t) + N) * a) parity ^= 1;
        }
      }
    }
    // Nearby translates of I'.
    for (long t = -3; t <= 3; ++t) {
      for (long s = -s_range; s <= s_range; ++s) {
        const P c{corner.x + static_cast<double>(t) * a, corner.y + static_cast<double>(s) + static_cast<double>(t) * alpha};
        if (segments_cross(base, z, c, P{c.x + v.x, c.y + v.y})) parity ^= 1;
      }
    }
    if (parity == 0) ++first;
  }
  const double p = static_cast<double>(first) / static_cast<double>(samples);
  return {p * a, (1 - p) * a, a * std::sqrt(p * (1 - p) / static_cast<double>(samples))};
}

}  // namespace relorbit::checkerboard
