#include "relorbit/flat_torus/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "relorbit/error.hpp"

namespace relorbit::flat_torus {
namespace {

constexpr const char* kModule = "flat_torus";
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
// Offsets inside a gap; irrational-looking so they stay clear of midpoints.
const Rational kGapFraction(987, 2584);

struct Point {
  Real x;
  Level y;
  long xkey = -1;  // shared by the two halves of a piece cut at eta
};

struct RawHorizontal {
  BigInt m, j;
  Real x0, x1;
};

struct RawSlanted {
  Point lo, hi;
};

Level form_level(const Real& alpha, BigInt m, BigInt j) {
  Level l;
  l.y = Real(m) + Real(j) * alpha;
  l.has_form = true;
  l.m = std::move(m);
  l.j = std::move(j);
  return l;
}

Level shift_level(const Level& l, const Real& alpha, const BigInt& dm, const BigInt& dj) {
  if (l.has_form) return form_level(alpha, l.m + dm, l.j + dj);
  Level out;
  out.y = l.y + Real(dm);
  if (dj != 0) out.y += Real(dj) * alpha;
  out.key = l.key;
  return out;
}

bool is_integer(const QuadraticScalar& v) { return v.is_rational() && v.rational_part().get_den() == 1; }

class ParityForest {
 public:
  explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // Path compression, keeping parities relative to the root.
    int acc = p;
    while (parent_[x] != x) {
      const std::size_t next = parent_[x];
      const int px = parity_[x];
      parent_[x] = r;
      parity_[x] = static_cast<std::uint8_t>(acc);
      acc ^= px;
      x = next;
    }
    return {r, p};
  }
  bool unite(std::size_t a, std::size_t b, int differ) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == differ;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    parity_[rb] = static_cast<std::uint8_t>(pa ^ pb ^ differ);
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

int compare_levels(const Level& a, const Level& b, const Real& alpha) {
  if (a.has_form && b.has_form) {
    if (a.m == b.m && a.j == b.j) return 0;
    return (Real(BigInt(a.m - b.m)) + Real(BigInt(a.j - b.j)) * alpha).sign();
  }
  if (a.key >= 0 && a.key == b.key) return 0;
  return compare(a.y, b.y);
}

Arrangement::Arrangement(const TorusFrame& frame, const HorizontalSlit& marked, const std::vector<Segment>& curves) {
  build(frame, marked, curves);
}

void Arrangement::build(const TorusFrame& frame, const HorizontalSlit& marked, const std::vector<Segment>& curves) {
  a_ = frame.a();
  alpha_ = frame.alpha();
  if (!a_.is_exact()) throw Error(ErrorCode::InvalidArgument, kModule, "a must be exact");

  // Window offset: every vertex sits at x = 0 or frac(N) mod a.
  {
    const QuadraticScalar f = marked.N.frac();
    QuadraticScalar rho;
    if (f.is_zero()) {
      rho = QuadraticScalar(kGapFraction);
    } else if (f * QuadraticScalar(2) >= QuadraticScalar(1)) {
      rho = f * QuadraticScalar(kGapFraction);
    } else {
      rho = f + (QuadraticScalar(1) - f) * QuadraticScalar(kGapFraction);
    }
    xi_ = Real((rho - QuadraticScalar(1)) * a_.exact());
    xi_right_ = xi_ + a_;
  }

  // Cut every curve at the vertical window edges and translate the pieces home.
  std::vector<RawHorizontal> horizontals;
  std::vector<RawSlanted> slanted;
  long split_id = 0;
  for (const Segment& seg : curves) {
    if (!seg.vector.x.is_exact()) throw Error(ErrorCode::InvalidArgument, kModule, "segment run must be exact");
    if (seg.vector.x.sign() == 0 && seg.vector.y.sign() == 0) {
      throw Error(ErrorCode::DegenerateSegment, kModule, "zero-length segment");
    }
    Point start{Real(seg.t0) * a_, form_level(alpha_, seg.s0, seg.t0)};
    Point end;
    end.x = start.x + seg.vector.x;
    {
      const QuadraticScalar t = (end.x / a_).exact() - marked.N;
      if (!is_integer(t)) throw Error(ErrorCode::InvalidArgument, kModule, "segment does not end at a lift of p2");
      BigInt tb = t.rational_part().get_num();
      const Real yend = start.y.y + seg.vector.y;
      BigInt s = (yend - Real(tb) * alpha_ + Real(Rational(1, 2))).floor();
      end.y = form_level(alpha_, std::move(s), std::move(tb));
    }
    const int sx = seg.vector.x.sign();
    const Point& left = sx >= 0 ? start : end;
    const Point& right = sx >= 0 ? end : start;
    const BigInt k0 = ((left.x - xi_) / a_).floor();
    const BigInt k1 = ((right.x - xi_) / a_).floor();
    if (sx == 0) {
      const Real x = left.x - Real(k0) * a_;
      Point lo = seg.vector.y.sign() > 0 ? start : end;
      Point hi = seg.vector.y.sign() > 0 ? end : start;
      lo.x = x;
      hi.x = x;
      lo.y = shift_level(lo.y, alpha_, 0, -k0);
      hi.y = shift_level(hi.y, alpha_, 0, -k0);
      slanted.push_back({std::move(lo), std::move(hi)});
      continue;
    }
    const int sy = seg.vector.y.sign();
    if (sy == 0) {
      for (BigInt k = k0; k <= k1; ++k) {
        const Real shift = Real(k) * a_;
        Real x0 = k == k0 ? left.x - shift : xi_;
        Real x1 = k == k1 ? right.x - shift : xi_right_;
        horizontals.push_back({left.y.m, left.y.j - k, std::move(x0), std::move(x1)});
      }
      continue;
    }
    const Real slope = seg.vector.y / seg.vector.x;
    Point entry = left;  // left end of the current piece, untranslated
    for (BigInt k = k0; k <= k1; ++k) {
      Point exit;
      Point next_entry;
      if (k == k1) {
        exit = right;
      } else {
        const Real y = left.y.y + (xi_right_ + Real(k) * a_ - left.x) * slope;
        exit.x = xi_right_ + Real(k) * a_;
        exit.y.y = y;
        exit.y.key = 2 * split_id + 1;
        next_entry.x = exit.x;
        next_entry.y.y = y;
        next_entry.y.key = 2 * split_id;
        ++split_id;
      }
      Point l = entry;
      Point r = exit;
      l.x = k == k0 ? l.x - Real(k) * a_ : xi_;
      r.x = k == k1 ? r.x - Real(k) * a_ : xi_right_;
      l.y = shift_level(l.y, alpha_, 0, -k);
      r.y = shift_level(r.y, alpha_, 0, -k);
      if (sy * sx > 0) {
        slanted.push_back({std::move(l), std::move(r)});
      } else {
        slanted.push_back({std::move(r), std::move(l)});
      }
      entry = std::move(next_entry);
    }
  }

  // Window height offset: a rational in the widest gap of all heights mod 1.
  {
    const long double ad = static_cast<long double>(alpha_.to_double());
    struct Item {
      long double frac;
      const Level* level;
    };
    std::vector<Level> hl;
    hl.reserve(horizontals.size());
    for (const RawHorizontal& h : horizontals) {
      Level l;
      l.has_form = true;
      l.m = h.m;
      l.j = h.j;
      hl.push_back(std::move(l));
    }
    std::vector<Item> items;
    auto approx = [&](const Level& l) -> long double {
      if (l.has_form) return static_cast<long double>(l.m.get_d()) + static_cast<long double>(l.j.get_d()) * ad;
      return static_cast<long double>(l.y.to_double());
    };
    auto push = [&](const Level& l) {
      const long double v = approx(l);
      items.push_back({v - std::floor(v), &l});
    };
    for (const Level& l : hl) push(l);
    for (const RawSlanted& s : slanted) {
      push(s.lo.y);
      push(s.hi.y);
    }
    std::sort(items.begin(), items.end(), [](const Item& p, const Item& q) { return p.frac < q.frac; });
    const std::size_t n = items.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto gap = [&](std::size_t i) {
      const long double lo = items[i].frac;
      const long double hi = i + 1 < n ? items[i + 1].frac : items[0].frac + 1;
      return hi - lo;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return gap(p) > gap(q); });
    auto level_y = [&](const Level& l) { return l.has_form ? Real(l.m) + Real(l.j) * alpha_ : l.y; };
    bool found = false;
    for (std::size_t tries = 0; tries < std::min<std::size_t>(n, 8) && !found; ++tries) {
      const std::size_t i = order[tries];
      const long double lo = items[i].frac;
      long double target = lo + gap(i) * 0.381966011250105151795L;
      const bool wrapped = target >= 1;
      if (wrapped) target -= 1;
      Rational eta(static_cast<double>(target));
      // Shorten to a modest denominator.
      mpz_class den(1);
      den <<= 40;
      eta = Rational(mpz_class(eta * Rational(den)), den);
      eta.canonicalize();
      const Real e(eta);
      const Real ylo = level_y(*items[i].level).frac();
      const Real yhi = level_y(*items[i + 1 < n ? i + 1 : 0].level).frac();
      const bool ok_lo = wrapped || ylo < e;
      const bool ok_hi = (i + 1 == n && !wrapped) || e < yhi;
      if (ok_lo && ok_hi) {
        eta_ = e;
        found = true;
      }
    }
    if (!found) throw PrecisionExhausted(kModule, "could not separate the window height from the cut");
  }

  // Reduce heights into [eta, eta + 1), splitting slanted pieces at the edges.
  const Real eta_top = eta_ + Real(1);
  std::vector<Level> hlevels;
  hlevels.reserve(horizontals.size());
  for (const RawHorizontal& h : horizontals) {
    Level l = form_level(alpha_, h.m, h.j);
    const BigInt f = (l.y - eta_).floor();
    hlevels.push_back(f == 0 ? std::move(l) : form_level(alpha_, h.m - f, h.j));
  }
  std::vector<RawSlanted> pieces;
  long eta_key = 0;
  for (RawSlanted& s : slanted) {
    const BigInt flo = (s.lo.y.y - eta_).floor();
    BigInt fhi = (s.hi.y.y - eta_).floor();
    if (compare(s.hi.y.y, eta_ + Real(fhi)) == 0) --fhi;
    const Real dxdy = (s.hi.x - s.lo.x) / (s.hi.y.y - s.lo.y.y);
    Point bottom = std::move(s.lo);
    for (BigInt m = flo; m <= fhi; ++m) {
      Point top;
      Point next_bottom;
      if (m == fhi) {
        top = s.hi;
      } else {
        const Real y = eta_ + Real(BigInt(m + 1));
        top.x = bottom.x + (y - bottom.y.y) * dxdy;
        top.y.y = y;
        top.xkey = eta_key;
        next_bottom.x = top.x;
        next_bottom.y.y = y;
        next_bottom.xkey = eta_key;
        ++eta_key;
      }
      Point b = bottom;
      Point t = top;
      if (m != 0) {
        b.y = shift_level(b.y, alpha_, -m, 0);
        t.y = shift_level(t.y, alpha_, -m, 0);
      }
      if (!b.y.has_form && b.y.key < 0 && b.xkey >= 0) b.y.y = eta_;
      if (!t.y.has_form && t.y.key < 0 && t.xkey >= 0) t.y.y = eta_top;
      pieces.push_back({std::move(b), std::move(t)});
      bottom = std::move(next_bottom);
    }
  }

  // Slanted pieces that cross get an extra level at the crossing height, so
  // walls never cross inside a band.
  std::vector<Level> crossings;
  if (pieces.size() > 1) {
    struct Span {
      double y0, y1, x0, x1;
    };
    std::vector<Span> spans;
    std::vector<Real> slopes;
    for (const RawSlanted& p : pieces) {
      const double a0 = p.lo.x.to_double(), a1 = p.hi.x.to_double();
      spans.push_back({p.lo.y.y.to_double(), p.hi.y.y.to_double(), std::min(a0, a1), std::max(a0, a1)});
      slopes.push_back((p.hi.x - p.lo.x) / (p.hi.y.y - p.lo.y.y));
    }
    constexpr double kSlack = 1e-9;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        const Span& u = spans[i];
        const Span& v = spans[j];
        if (u.y1 < v.y0 - kSlack || v.y1 < u.y0 - kSlack || u.x1 < v.x0 - kSlack || v.x1 < u.x0 - kSlack) continue;
        const Real dd = slopes[i] - slopes[j];
        if (dd.is_exact() && dd.exact().is_zero()) continue;
        const RawSlanted& p = pieces[i];
        const RawSlanted& q = pieces[j];
        const Real y = (q.lo.x - p.lo.x + p.lo.y.y * slopes[i] - q.lo.y.y * slopes[j]) / dd;
        if (compare(y, max(p.lo.y.y, q.lo.y.y)) <= 0 || compare(y, min(p.hi.y.y, q.hi.y.y)) >= 0) continue;
        if (!y.is_exact()) {
          throw Error(ErrorCode::InvalidArgument, kModule, "crossing slanted cuts need exact coordinates");
        }
        Level l;
        l.y = y;
        crossings.push_back(std::move(l));
      }
    }
  }

  // Sort and merge all heights.
  {
    const long double ad = static_cast<long double>(alpha_.to_double());
    std::vector<const Level*> items;
    items.reserve(hlevels.size() + 2 * pieces.size() + 2);
    for (const Level& l : hlevels) items.push_back(&l);
    for (const RawSlanted& p : pieces) {
      items.push_back(&p.lo.y);
      items.push_back(&p.hi.y);
    }
    for (const Level& l : crossings) items.push_back(&l);
    Level bottom_level;
    bottom_level.y = eta_;
    Level top_level;
    top_level.y = eta_top;
    items.push_back(&bottom_level);
    items.push_back(&top_level);
    std::vector<long double> approx(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Level& l = *items[i];
      approx[i] = l.has_form ? static_cast<long double>(l.m.get_d()) + static_cast<long double>(l.j.get_d()) * ad
                             : static_cast<long double>(l.y.to_double());
    }
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return approx[p] < approx[q]; });
    bool sorted = true;
    for (std::size_t i = 1; i < order.size() && sorted; ++i) {
      sorted = compare_levels(*items[order[i - 1]], *items[order[i]], alpha_) <= 0;
    }
    if (!sorted) {
      std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
        return compare_levels(*items[p], *items[q], alpha_) < 0;
      });
    }
    std::vector<std::size_t> index(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || compare_levels(levels_.back(), *items[order[i]], alpha_) != 0) levels_.push_back(*items[order[i]]);
      index[order[i]] = levels_.size() - 1;
    }
    if (index[items.size() - 2] != 0 || index[items.size() - 1] != levels_.size() - 1) {
      throw Error(ErrorCode::DegenerateCell, kModule, "cut heights escaped the window");
    }

    cuts_.assign(levels_.size(), {});
    for (std::size_t i = 0; i < horizontals.size(); ++i) {
      cuts_[index[i]].emplace_back(horizontals[i].x0, horizontals[i].x1);
    }
    for (auto& list : cuts_) {
      if (list.size() < 2) continue;
      // Mod-2 union: cancel shared endpoints, then pair up what remains.
      std::vector<Real> ends;
      for (auto& [x0, x1] : list) {
        ends.push_back(std::move(x0));
        ends.push_back(std::move(x1));
      }
      std::sort(ends.begin(), ends.end(), [](const Real& p, const Real& q) { return compare(p, q) < 0; });
      std::vector<Real> kept;
      for (Real& e : ends) {
        if (!kept.empty() && compare(kept.back(), e) == 0) {
          kept.pop_back();
        } else {
          kept.push_back(std::move(e));
        }
      }
      list.clear();
      for (std::size_t i = 0; i + 1 < kept.size(); i += 2) list.emplace_back(kept[i], kept[i + 1]);
    }

    const std::size_t base = hlevels.size();
    pieces_.reserve(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      RawSlanted& raw = pieces[i];
      Piece p;
      p.lo = index[base + 2 * i];
      p.hi = index[base + 2 * i + 1];
      if (p.lo >= p.hi) throw Error(ErrorCode::DegenerateCell, kModule, "slanted cut of zero height");
      p.key_lo = raw.lo.xkey;
      p.key_hi = raw.hi.xkey;
      const Real dxdy = (raw.hi.x - raw.lo.x) / (raw.hi.y.y - raw.lo.y.y);
      const bool vertical = raw.hi.x.is_exact() && raw.lo.x.is_exact() && raw.hi.x.exact() == raw.lo.x.exact();
      p.xs.reserve(p.hi - p.lo + 1);
      p.xs.push_back(raw.lo.x);
      for (std::size_t l = p.lo + 1; l < p.hi; ++l) {
        p.xs.push_back(vertical ? raw.lo.x : raw.lo.x + (levels_[l].y - raw.lo.y.y) * dxdy);
      }
      p.xs.push_back(raw.hi.x);
      pieces_.push_back(std::move(p));
    }
  }

  // Walls of each band, left to right.
  const std::size_t bands = band_count();
  band_walls_.assign(bands + 1, 0);
  for (const Piece& p : pieces_) {
    for (std::size_t b = p.lo; b < p.hi; ++b) ++band_walls_[b + 1];
  }
  for (std::size_t b = 0; b < bands; ++b) band_walls_[b + 1] += band_walls_[b];
  walls_.assign(band_walls_.back(), 0);
  {
    std::vector<std::size_t> fill(band_walls_.begin(), band_walls_.end() - 1);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      for (std::size_t b = pieces_[i].lo; b < pieces_[i].hi; ++b) walls_[fill[b]++] = i;
    }
  }
  for (std::size_t b = 0; b < bands; ++b) {
    const auto first = walls_.begin() + static_cast<std::ptrdiff_t>(band_walls_[b]);
    const auto last = walls_.begin() + static_cast<std::ptrdiff_t>(band_walls_[b + 1]);
    if (last - first < 2) continue;
    std::vector<std::pair<Real, std::size_t>> keyed;
    for (auto it = first; it != last; ++it) keyed.emplace_back(wall_x(*it, b) + wall_x(*it, b + 1), *it);
    std::sort(keyed.begin(), keyed.end(), [](const auto& p, const auto& q) { return compare(p.first, q.first) < 0; });
    for (std::size_t i = 0; i < keyed.size(); ++i) *(first + static_cast<std::ptrdiff_t>(i)) = keyed[i].second;
  }
  cell_band_.resize(walls_.size() + bands);
  for (std::size_t b = 0; b < bands; ++b) {
    for (std::size_t c = first_cell(b); c <= last_cell(b); ++c) cell_band_[c] = b;
  }

  // Parity constraints.
  ParityForest forest(cell_count());
  bool ok = true;
  visit([&](std::size_t p, std::size_t q, int state) {
    if (state == 2) ok = false;
    if (!forest.unite(p, q, state)) ok = false;
  });
  colors_.assign(cell_count(), 0);
  if (!ok) return;
  const std::size_t root = forest.find(0).first;
  for (std::size_t c = 1; c < cell_count(); ++c) {
    if (forest.find(c).first != root) throw Error(ErrorCode::DegenerateCell, kModule, "cell graph is disconnected");
  }

  // Basepoint: just above p1 and slightly to its left.
  {
    Level p1 = form_level(alpha_, 0, 0);
    const BigInt f = (p1.y - eta_).floor();
    p1 = form_level(alpha_, -f, 0);
    const auto it = std::lower_bound(levels_.begin(), levels_.end(), p1, [&](const Level& l, const Level& v) {
      return compare_levels(l, v, alpha_) < 0;
    });
    if (it == levels_.end() || compare_levels(*it, p1, alpha_) != 0) {
      throw Error(ErrorCode::InvalidArgument, kModule, "p1 is not a vertex of the cut");
    }
    const std::size_t band = static_cast<std::size_t>(it - levels_.begin());
    std::size_t left = 0;
    const Real zero(0);
    for (std::size_t w = band_walls_[band]; w < band_walls_[band + 1]; ++w) {
      const Real& xb = wall_x(walls_[w], band);
      const int c = compare(xb, zero);
      if (c < 0 || (c == 0 && compare(wall_x(walls_[w], band + 1), xb) < 0)) ++left;
    }
    basepoint_cell_ = first_cell(band) + left;
  }
  const int base_parity = forest.find(basepoint_cell_).second;
  areas_ = {Real(0), Real(0)};
  for (std::size_t c = 0; c < cell_count(); ++c) {
    colors_[c] = static_cast<std::uint8_t>(1 + (forest.find(c).second ^ base_parity));
    Real area = cell_area(c);
    if (area.sign() <= 0) throw Error(ErrorCode::DegenerateCell, kModule, "cell with non-positive area");
    areas_[colors_[c] - 1] += area;
  }
  consistent_ = true;
}

std::vector<Arrangement::Breakpoint> Arrangement::breakpoints(std::size_t band, std::size_t level) const {
  std::vector<Breakpoint> out;
  out.reserve(band_walls_[band + 1] - band_walls_[band]);
  for (std::size_t w = band_walls_[band]; w < band_walls_[band + 1]; ++w) {
    const std::size_t p = walls_[w];
    const Piece& piece = pieces_[p];
    const long key = level == piece.lo ? piece.key_lo : level == piece.hi ? piece.key_hi : -1;
    out.push_back({&wall_x(p, level), p, key});
  }
  return out;
}

int Arrangement::compare_breakpoints(const Breakpoint& p, const Breakpoint& q) const {
  if (p.piece != kNone && p.piece == q.piece) return 0;
  if (p.key >= 0 && p.key == q.key) return 0;
  if (p.x == q.x) return 0;
  return compare(*p.x, *q.x);
}

void Arrangement::visit(const std::function<void(std::size_t, std::size_t, int)>& f) const {
  const std::size_t bands = band_count();
  const Breakpoint left_edge{&xi_, kNone, -1};
  const Breakpoint right_edge{&xi_right_, kNone, -1};

  // Neighbors across a slanted wall.
  for (std::size_t b = 0; b < bands; ++b) {
    for (std::size_t c = first_cell(b); c < last_cell(b); ++c) f(c, c + 1, 1);
  }

  // Horizontal boundaries; the top of the last band meets the bottom of the first.
  for (std::size_t b = 0; b < bands; ++b) {
    const std::size_t upper = (b + 1) % bands;
    const std::size_t level = b + 1;
    std::vector<Breakpoint> lo = breakpoints(b, level);
    std::vector<Breakpoint> hi = breakpoints(upper, upper == 0 ? 0 : level);
    if (upper == 0) {
      // A piece spanning the whole window meets itself only through its keys.
      for (Breakpoint& p : lo) p.piece = kNone;
      for (Breakpoint& p : hi) p.piece = kNone;
    }
    const std::vector<std::pair<Real, Real>>* cuts = level < bands ? &cuts_[level] : nullptr;
    std::size_t ci = 0;
    auto cut_state = [&](const Real& u, const Real& w) -> int {
      if (cuts == nullptr) return 0;
      while (ci < cuts->size() && compare((*cuts)[ci].second, u) <= 0) ++ci;
      if (ci == cuts->size()) return 0;
      const auto& [c0, c1] = (*cuts)[ci];
      if (compare(c0, u) <= 0) return compare(c1, w) >= 0 ? 1 : 2;
      return compare(c0, w) < 0 ? 2 : 0;
    };
    std::size_t i = 0;
    std::size_t j = 0;
    Breakpoint cur = left_edge;
    while (true) {
      const Breakpoint& nl = i < lo.size() ? lo[i] : right_edge;
      const Breakpoint& nu = j < hi.size() ? hi[j] : right_edge;
      const int c = compare_breakpoints(nl, nu);
      const Breakpoint next = c <= 0 ? nl : nu;
      if (compare_breakpoints(cur, next) != 0) f(first_cell(b) + i, first_cell(upper) + j, cut_state(*cur.x, *next.x));
      if (compare_breakpoints(next, right_edge) == 0) break;
      if (c <= 0) ++i;
      if (c >= 0) ++j;
      cur = next;
    }
  }

  // Vertical edge: the right edge at height y is glued to the left edge at y - alpha (mod 1).
  const BigInt A = alpha_.floor();
  const Real alpha_frac = alpha_ - Real(A);
  const Real threshold = eta_ + alpha_frac;
  std::size_t w = 1;
  {
    std::size_t lo = 0;
    std::size_t hi = bands;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (compare(levels_[mid].y, threshold) < 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    w = lo;
  }
  auto shifted = [&](std::size_t l, long extra) {
    Level out = shift_level(levels_[l], alpha_, BigInt(A + extra), -1);
    out.key = levels_[l].key >= 0 && levels_[l].key % 2 == 1 ? levels_[l].key - 1 : -1;
    return out;
  };
  struct Mark {
    Level y;
    std::size_t band;
  };
  std::vector<Mark> right;
  right.reserve(bands + 1);
  const bool aligned = compare(levels_[w].y, threshold) == 0;
  if (!aligned) right.push_back({shifted(w, 0), w - 1});
  for (std::size_t b = w; b < bands; ++b) right.push_back({shifted(b + 1, 0), b});
  for (std::size_t b = 0; b + 1 < w; ++b) right.push_back({shifted(b + 1, 1), b});
  if (aligned) {
    if (w > 0) right.push_back({shifted(w, 1), w - 1});
  } else {
    Level top;
    top.y = eta_ + Real(1);
    right.push_back({std::move(top), w - 1});
  }
  std::size_t i = 0;  // left bands
  std::size_t j = 0;  // right marks
  Level cur = levels_[0];
  while (i < bands && j < right.size()) {
    const Level& nl = levels_[i + 1];
    const Level& nr = right[j].y;
    const int c = compare_levels(nl, nr, alpha_);
    const Level& next = c <= 0 ? nl : nr;
    if (compare_levels(cur, next, alpha_) != 0) f(last_cell(right[j].band), first_cell(i), 0);
    cur = next;
    if (c <= 0) ++i;
    if (c >= 0) ++j;
  }
}

Arrangement::Cell Arrangement::cell(std::size_t index) const {
  const std::size_t b = cell_band_[index];
  const std::size_t k = index - first_cell(b);
  const std::size_t walls = band_walls_[b + 1] - band_walls_[b];
  Cell c;
  c.band = b;
  c.y_bottom = levels_[b].y;
  c.y_top = levels_[b + 1].y;
  if (k == 0) {
    c.x_left_bottom = xi_;
    c.x_left_top = xi_;
  } else {
    const std::size_t p = walls_[band_walls_[b] + k - 1];
    c.x_left_bottom = wall_x(p, b);
    c.x_left_top = wall_x(p, b + 1);
  }
  if (k == walls) {
    c.x_right_bottom = xi_right_;
    c.x_right_top = xi_right_;
  } else {
    const std::size_t p = walls_[band_walls_[b] + k];
    c.x_right_bottom = wall_x(p, b);
    c.x_right_top = wall_x(p, b + 1);
  }
  return c;
}

Real Arrangement::cell_area(std::size_t index) const {
  const Cell c = cell(index);
  return (c.y_top - c.y_bottom) * ((c.x_right_bottom - c.x_left_bottom) + (c.x_right_top - c.x_left_top)) *
         Real(Rational(1, 2));
}

std::vector<Arrangement::Adjacency> Arrangement::adjacencies() const {
  std::vector<Adjacency> out;
  visit([&](std::size_t p, std::size_t q, int state) { out.push_back({p, q, state != 0}); });
  return out;
}

std::vector<Arrangement::SlantedCut> Arrangement::slanted_cuts() const {
  std::vector<SlantedCut> out;
  out.reserve(pieces_.size());
  for (const Piece& p : pieces_) out.push_back({p.xs.front(), levels_[p.lo].y, p.xs.back(), levels_[p.hi].y});
  return out;
}

std::vector<Arrangement::HorizontalCut> Arrangement::horizontal_cuts() const {
  std::vector<HorizontalCut> out;
  for (std::size_t l = 0; l < cuts_.size(); ++l) {
    for (const auto& [x0, x1] : cuts_[l]) out.push_back({levels_[l].y, x0, x1});
  }
  return out;
}

}  // namespace relorbit::flat_torus
