#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "relorbit/checkerboard/checkerboard.hpp"
#include "relorbit/exact_numbers/scalar_format.hpp"

namespace relorbit::checkerboard {
namespace {

struct P {
  double x, y;
};
using Polygon = std::vector<P>;

// Clip against the half-plane where coordinate `axis` compares `keep_above` with `bound`.
Polygon clip(const Polygon& poly, int axis, double bound, bool keep_above) {
  Polygon out;
  auto coord = [axis](const P& p) { return axis == 0 ? p.x : p.y; };
  auto inside = [&](const P& p) { return keep_above ? coord(p) >= bound : coord(p) <= bound; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P& cur = poly[i];
    const P& prev = poly[(i + poly.size() - 1) % poly.size()];
    if (inside(cur)) {
      if (!inside(prev)) {
        const double t = (bound - coord(prev)) / (coord(cur) - coord(prev));
        out.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
      }
      out.push_back(cur);
    } else if (inside(prev)) {
      const double t = (bound - coord(prev)) / (coord(cur) - coord(prev));
      out.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
    }
  }
  return out;
}

class Domain {
 public:
  explicit Domain(const Checkerboard& cb)
      : a_(cb.a.to_double()), alpha_(cb.torus.alpha().approximate(64).to_double()) {}

  double a() const { return a_; }
  double alpha() const { return alpha_; }
  // Plane point -> lattice coordinates (s, t) stored as (x: t, y: s).
  P to_lattice(P p) const { return {p.x / a_, p.y - p.x / a_ * alpha_}; }
  P from_lattice(P q) const { return {q.x * a_, q.y + q.x * alpha_}; }

  // Pieces of a polygon folded into the fundamental parallelogram.
  std::vector<Polygon> fold(const Polygon& poly) const {
    Polygon lat;
    for (const P& p : poly) lat.push_back(to_lattice(p));
    double tmin = lat[0].x, tmax = lat[0].x, smin = lat[0].y, smax = lat[0].y;
    for (const P& q : lat) {
      tmin = std::min(tmin, q.x);
      tmax = std::max(tmax, q.x);
      smin = std::min(smin, q.y);
      smax = std::max(smax, q.y);
    }
    std::vector<Polygon> out;
    for (long i = static_cast<long>(std::floor(tmin)); i < tmax; ++i) {
      for (long j = static_cast<long>(std::floor(smin)); j < smax; ++j) {
        Polygon piece = clip(lat, 0, static_cast<double>(i), true);
        piece = clip(piece, 0, static_cast<double>(i + 1), false);
        piece = clip(piece, 1, static_cast<double>(j), true);
        piece = clip(piece, 1, static_cast<double>(j + 1), false);
        if (piece.size() < 3) continue;
        for (P& q : piece) q = from_lattice({q.x - static_cast<double>(i), q.y - static_cast<double>(j)});
        out.push_back(std::move(piece));
      }
    }
    return out;
  }

  // Segment pieces folded into the parallelogram.
  std::vector<std::pair<P, P>> fold(P a, P b) const {
    const P la = to_lattice(a);
    const P lb = to_lattice(b);
    std::vector<double> cuts{0.0, 1.0};
    auto add = [&](double u0, double u1) {
      if (u0 == u1) return;
      for (long n = static_cast<long>(std::ceil(std::min(u0, u1))); n <= std::max(u0, u1); ++n) {
        const double r = (static_cast<double>(n) - u0) / (u1 - u0);
        if (r > 0 && r < 1) cuts.push_back(r);
      }
    };
    add(la.x, lb.x);
    add(la.y, lb.y);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<P, P>> out;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double r0 = cuts[k];
      const double r1 = cuts[k + 1];
      if (r1 - r0 < 1e-15) continue;
      const double rm = (r0 + r1) / 2;
      const double ti = std::floor(la.x + rm * (lb.x - la.x));
      const double sj = std::floor(la.y + rm * (lb.y - la.y));
      auto at = [&](double r) {
        return from_lattice({la.x + r * (lb.x - la.x) - ti, la.y + r * (lb.y - la.y) - sj});
      };
      out.emplace_back(at(r0), at(r1));
    }
    return out;
  }

 private:
  double a_;
  double alpha_;
};

}  // namespace

std::string render_svg(const Checkerboard& cb) {
  const Domain dom(cb);
  const double scale = 1000.0 / dom.a();
  const double height = 1000.0 * (1.0 + dom.alpha()) / dom.a();
  const double ytop = 1.0 + std::max(0.0, dom.alpha());
  auto sx = [&](double x) { return x * scale; };
  auto sy = [&](double y) { return (ytop - y) * scale; };
  std::ostringstream out;
  out << std::setprecision(8);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 " << height << "\">\n";
  for (const ColoredCell& cell : cb.cells) {
    Polygon poly;
    for (const Vec2& v : cell.vertices) poly.push_back({v.x.to_double(), v.y.to_double()});
    const char* fill = cell.color == 1 ? "#ffffff" : "#d94040";
    for (const Polygon& piece : dom.fold(poly)) {
      out << "<polygon fill=\"" << fill << "\" stroke=\"none\" points=\"";
      for (std::size_t i = 0; i < piece.size(); ++i) out << (i ? " " : "") << sx(piece[i].x) << ',' << sy(piece[i].y);
      out << "\"/>\n";
    }
  }
  // Outline of the fundamental parallelogram.
  const P corners[4] = {{0, 0}, {dom.a(), dom.alpha()}, {dom.a(), dom.alpha() + 1}, {0, 1}};
  out << "<polygon fill=\"none\" stroke=\"#808080\" stroke-width=\"1px\" points=\"";
  for (int i = 0; i < 4; ++i) out << (i ? " " : "") << sx(corners[i].x) << ',' << sy(corners[i].y);
  out << "\"/>\n";
  auto curve = [&](P from, P to, const char* color, const char* cls) {
    for (const auto& [p, q] : dom.fold(from, to)) {
      out << "<line class=\"" << cls << "\" x1=\"" << sx(p.x) << "\" y1=\"" << sy(p.y) << "\" x2=\"" << sx(q.x)
          << "\" y2=\"" << sy(q.y) << "\" stroke=\"" << color << "\" stroke-width=\"2px\"/>\n";
    }
  };
  curve({0, 0}, {cb.slit.N.to_double() * dom.a(), 0}, "#000000", "slit");
  const auto [cs, ct] = flat_torus::corner_coords(cb.short_slit.anchor);
  const P start{ct.get_d() * dom.a(), cs.get_d() + ct.get_d() * dom.alpha()};
  curve(start, {start.x + cb.short_slit.vector.x.to_double(), start.y + cb.short_slit.vector.y.to_double()}, "#2050c0",
        "short-slit");
  out << "</svg>\n";
  return out.str();
}

std::string render_csv(const Checkerboard& cb) {
  using exact_numbers::to_decimal;
  std::ostringstream out;
  out << "cell,color,area,x0,y0,x1,y1,x2,y2,x3,y3\n";
  for (std::size_t i = 0; i < cb.cells.size(); ++i) {
    const ColoredCell& c = cb.cells[i];
    out << i << ',' << c.color << ',' << to_decimal(c.area, 40);
    for (const Vec2& v : c.vertices) out << ',' << to_decimal(v.x, 40) << ',' << to_decimal(v.y, 40);
    out << '\n';
  }
  return out.str();
}

}  // namespace relorbit::checkerboard
