#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "relorbit/flat_torus/torus.hpp"

namespace relorbit::flat_torus {

// A height inside the window. When has_form, y == m + j*alpha exactly, and
// equality with another such height is decided on (m, j). key identifies the
// two copies of a point where a cut leaves the right edge and re-enters on the
// left (odd key: right copy, key - 1: left copy).
struct Level {
  Real y;
  bool has_form = false;
  BigInt m;
  BigInt j;
  long key = -1;
};

// The torus cut along the mod-2 sum of segments joining the two marked points,
// drawn in the window [xi, xi + a) x [eta, eta + 1). Horizontal bands run
// between consecutive cut heights; slanted cuts split each band into
// trapezoids. Faces are 2-colored by parity from the basepoint just above p1
// (color 1), if the cut curve is null-homologous mod 2.
class Arrangement {
 public:
  Arrangement(const TorusFrame& frame, const HorizontalSlit& marked, const std::vector<Segment>& curves);

  bool consistent() const { return consistent_; }
  const Real& xi() const { return xi_; }
  const Real& eta() const { return eta_; }
  const Real& width() const { return a_; }
  std::size_t band_count() const { return levels_.size() - 1; }
  std::size_t cell_count() const { return cell_band_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }

  struct Cell {
    std::size_t band;
    Real y_bottom, y_top;
    Real x_left_bottom, x_right_bottom, x_left_top, x_right_top;
  };
  Cell cell(std::size_t index) const;
  Real cell_area(std::size_t index) const;
  // 1 or 2; only meaningful when consistent().
  int color(std::size_t index) const { return colors_[index]; }
  std::size_t basepoint_cell() const { return basepoint_cell_; }
  const Real& area(int color) const { return areas_[static_cast<std::size_t>(color - 1)]; }
  // Cell pairs sharing an edge, with whether the edge lies on the cut curve.
  struct Adjacency {
    std::size_t first, second;
    bool across_cut;
  };
  std::vector<Adjacency> adjacencies() const;

  struct SlantedCut {
    Real x_bottom, y_bottom, x_top, y_top;
  };
  struct HorizontalCut {
    Real y, x0, x1;
  };
  std::vector<SlantedCut> slanted_cuts() const;
  std::vector<HorizontalCut> horizontal_cuts() const;

 private:
  struct Piece {
    std::size_t lo, hi;  // level indices
    long key_lo = -1, key_hi = -1;  // shared by the two halves of a piece cut at eta
    std::vector<Real> xs;  // x at levels lo..hi
  };
  struct Breakpoint {
    const Real* x;
    std::size_t piece;
    long key;
  };

  void build(const TorusFrame& frame, const HorizontalSlit& marked, const std::vector<Segment>& curves);
  std::vector<Breakpoint> breakpoints(std::size_t band, std::size_t level) const;
  int compare_breakpoints(const Breakpoint& p, const Breakpoint& q) const;
  std::size_t first_cell(std::size_t band) const { return band_walls_[band] + band; }
  std::size_t last_cell(std::size_t band) const { return band_walls_[band + 1] + band; }
  const Real& wall_x(std::size_t piece, std::size_t level) const { return pieces_[piece].xs[level - pieces_[piece].lo]; }
  // Calls f(cell, cell, state) for every edge shared by two cells; state 0 free, 1 cut, 2 partly cut.
  void visit(const std::function<void(std::size_t, std::size_t, int)>& f) const;

  Real a_, alpha_, xi_, xi_right_, eta_;
  std::vector<Level> levels_;
  std::vector<std::vector<std::pair<Real, Real>>> cuts_;  // per level, sorted and disjoint
  std::vector<Piece> pieces_;
  std::vector<std::size_t> band_walls_;  // offsets into walls_, size bands + 1
  std::vector<std::size_t> walls_;
  std::vector<std::size_t> cell_band_;
  std::vector<std::uint8_t> colors_;
  std::size_t basepoint_cell_ = 0;
  std::array<Real, 2> areas_;
  bool consistent_ = false;
};

int compare_levels(const Level& a, const Level& b, const Real& alpha);

}  // namespace relorbit::flat_torus
