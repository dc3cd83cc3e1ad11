#include "relorbit/slit_surface/slit_surface.hpp"

#include <algorithm>
#include <limits>

#include "relorbit/error.hpp"
#include "relorbit/flat_torus/reduce.hpp"

namespace relorbit::slit_surface {
namespace {

constexpr const char* kModule = "slit_surface";

bool same(const Real& x, const Real& y) { return x.is_exact() && y.is_exact() && x.exact() == y.exact(); }

Vec2 shear(const QuadraticScalar& s, const Vec2& v) { return {v.x + Real(s) * v.y, v.y}; }

double sup_distance(const Vec2& u, const Vec2& v) {
  return std::max((u.x - v.x).abs().to_double(), (u.y - v.y).abs().to_double());
}

double oriented_distance(const PeriodTuple& p, const PeriodTuple& q) {
  double best = std::numeric_limits<double>::infinity();
  for (int swap = 0; swap < 2; ++swap) {
    const Vec2& g1 = swap ? q.gamma2 : q.gamma1;
    const Vec2& d1 = swap ? q.delta2 : q.delta1;
    const Vec2& g2 = swap ? q.gamma1 : q.gamma2;
    const Vec2& d2 = swap ? q.delta1 : q.delta2;
    const double absolute =
        std::max({sup_distance(p.gamma1, g1), sup_distance(p.delta1, d1), sup_distance(p.gamma2, g2),
                  sup_distance(p.delta2, d2)});
    if (absolute >= best) continue;
    for (int sign = 0; sign < 2; ++sign) {
      for (int e = 0; e < 4; ++e) {
        Vec2 J = sign ? Vec2{-q.J.x, -q.J.y} : q.J;
        if (e & 1) J = J + Real(2) * g1;
        if (e & 2) J = J + Real(2) * d1;
        best = std::min(best, std::max(absolute, sup_distance(p.J, J)));
      }
    }
  }
  return best;
}

}  // namespace

ELocusSurface make_surface(NormalizedTorus torus, QuadraticScalar N, TremorParam tremor) {
  return ELocusSurface{std::move(torus), flat_torus::make_horizontal_slit(std::move(N)), std::move(tremor)};
}

bool exactly_equal(const PeriodTuple& p, const PeriodTuple& q) {
  const auto a = p.components();
  const auto b = q.components();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same(a[i]->x, b[i]->x) || !same(a[i]->y, b[i]->y)) return false;
  }
  return true;
}

Real copy_area(const PeriodTuple& t, int copy) {
  const Vec2& g = copy == 1 ? t.gamma1 : t.gamma2;
  const Vec2& d = copy == 1 ? t.delta1 : t.delta2;
  return d.x * g.y - d.y * g.x;
}

PeriodTuple period_tuple(const ELocusSurface& surface, unsigned bits) {
  const flat_torus::TorusFrame frame = surface.torus.frame(bits);
  const Vec2 gamma{Real(0), Real(1)};
  const Vec2 delta{frame.a(), frame.alpha()};
  const TremorParam& c = surface.tremor;
  return PeriodTuple{shear(c.a1, gamma), shear(c.a1, delta), shear(c.a2, gamma), shear(c.a2, delta),
                     Vec2{Real(surface.slit.N) * frame.a(), Real(0)}};
}

Matrix2::Matrix2(QuadraticScalar a, QuadraticScalar b, QuadraticScalar c, QuadraticScalar d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (m_[0] * m_[3] - m_[1] * m_[2] != QuadraticScalar(1)) {
    throw Error(ErrorCode::NonUnimodular, kModule, "matrix determinant is not 1");
  }
}

Matrix2 Matrix2::identity() { return Matrix2(QuadraticScalar(1), QuadraticScalar(0), QuadraticScalar(0), QuadraticScalar(1)); }

Matrix2 Matrix2::horocycle(const QuadraticScalar& s) {
  return Matrix2(QuadraticScalar(1), s, QuadraticScalar(0), QuadraticScalar(1));
}

Matrix2 Matrix2::geodesic(const QuadraticScalar& lambda) {
  if (lambda.sign() <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "geodesic parameter must be positive");
  return Matrix2(lambda, QuadraticScalar(0), QuadraticScalar(0), QuadraticScalar(1) / lambda);
}

Vec2 Matrix2::operator*(const Vec2& v) const {
  return {Real(m_[0]) * v.x + Real(m_[1]) * v.y, Real(m_[2]) * v.x + Real(m_[3]) * v.y};
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  return Matrix2(m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                 m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

PeriodTuple apply_gl(const Matrix2& g, const PeriodTuple& t) {
  return PeriodTuple{g * t.gamma1, g * t.delta1, g * t.gamma2, g * t.delta2, g * t.J};
}

PeriodTuple apply_gl(const Matrix2& g, const ELocusSurface& surface) { return apply_gl(g, period_tuple(surface)); }

ELocusSurface rel(const ELocusSurface& surface, const QuadraticScalar& t) {
  const QuadraticScalar& a = surface.torus.a();
  if (t <= -(surface.slit.N * a)) {
    throw Error(ErrorCode::SingularityCollision, kModule, "rel would collapse the slit: t <= -N a");
  }
  ELocusSurface out = surface;
  out.slit.N = surface.slit.N + t / a;
  return out;
}

PeriodTuple rel(const PeriodTuple& tuple, const Real& t) {
  PeriodTuple out = tuple;
  out.J.x = tuple.J.x + t;
  if (out.J.x.is_exact() && out.J.y.is_exact() && out.J.x.exact().is_zero() && out.J.y.exact().is_zero()) {
    throw Error(ErrorCode::SingularityCollision, kModule, "rel would make the zeros collide");
  }
  return out;
}

QuadraticScalar rel_defined_lower(const ELocusSurface& surface) {
  if (surface.torus.alpha().known_depth()) {
    throw Error(ErrorCode::InvalidArgument, kModule, "rel definedness is specialized to irrational alpha");
  }
  return -(surface.slit.N * surface.torus.a());
}

ELocusSurface tremor(const ELocusSurface& surface, const TremorParam& c) {
  ELocusSurface out = surface;
  out.tremor.a1 = surface.tremor.a1 + c.a1;
  out.tremor.a2 = surface.tremor.a2 + c.a2;
  return out;
}

PeriodTuple tremor(const PeriodTuple& tuple, const TremorParam& c) {
  if (tuple.J.y.sign() != 0) throw Error(ErrorCode::InvalidArgument, kModule, "tuple-level tremor needs a horizontal J");
  return PeriodTuple{shear(c.a1, tuple.gamma1), shear(c.a1, tuple.delta1), shear(c.a2, tuple.gamma2),
                     shear(c.a2, tuple.delta2), tuple.J};
}

PeriodTuple canonical_tuple(const ELocusSurface& surface, const Checkerboard& cb, unsigned bits) {
  const PeriodTuple base = period_tuple(surface, bits);
  const Real theta = checkerboard::exchange_proportion(cb);
  const Real rest = Real(1) - theta;
  auto mix = [](const Real& w1, const Vec2& v1, const Real& w2, const Vec2& v2) { return w1 * v1 + w2 * v2; };
  PeriodTuple out{mix(rest, base.gamma1, theta, base.gamma2), mix(rest, base.delta1, theta, base.delta2),
                  mix(theta, base.gamma1, rest, base.gamma2), mix(theta, base.delta1, rest, base.delta2),
                  cb.short_slit.vector};
  return out;
}

PeriodTuple canonical_tuple(const ELocusSurface& surface, unsigned bits) {
  return canonical_tuple(surface, checkerboard::build_limited(surface.torus, surface.slit), bits);
}

double stratum_pseudodistance(const PeriodTuple& p, const PeriodTuple& q) {
  return std::min(oriented_distance(p, q), oriented_distance(q, p));
}

Real tremor_holonomy_gap(const ELocusSurface& surface, const Checkerboard& cb) {
  return checkerboard::exchange_proportion(cb) * Real((surface.tremor.a1 - surface.tremor.a2).abs());
}

}  // namespace relorbit::slit_surface
