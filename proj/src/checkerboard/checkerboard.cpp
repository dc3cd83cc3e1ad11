#include "relorbit/checkerboard/checkerboard.hpp"

#include "relorbit/error.hpp"
#include "relorbit/exact_numbers/continued_fraction.hpp"
#include "relorbit/exact_numbers/precision.hpp"
#include "relorbit/flat_torus/arrangement.hpp"

namespace relorbit::checkerboard {
namespace {

constexpr const char* kModule = "checkerboard";

Checkerboard from_arrangement(const NormalizedTorus& torus, const HorizontalSlit& slit, const ShortSlit& short_slit,
                              unsigned bits) {
  const flat_torus::TorusFrame frame = torus.frame(bits);
  const flat_torus::Arrangement arr(frame, slit, {flat_torus::lift(frame, slit), flat_torus::lift(frame, short_slit)});
  if (!arr.consistent()) {
    throw Error(ErrorCode::NotHomologous, kModule, "I + I' does not bound: no proper 2-coloring exists");
  }
  Checkerboard cb{torus, slit, short_slit, frame.a(), arr.area(1), arr.area(2), std::nullopt, {}, arr.xi(), arr.eta(),
                  false};
  if (cb.B1.sign() == 0 || cb.B2.sign() == 0) {
    throw Error(ErrorCode::DegenerateCell, kModule, "one color class is empty (I and I' coincide)");
  }
  cb.cells.reserve(arr.cell_count());
  for (std::size_t i = 0; i < arr.cell_count(); ++i) {
    flat_torus::Arrangement::Cell c = arr.cell(i);
    ColoredCell out;
    out.color = arr.color(i);
    out.area = arr.cell_area(i);
    out.vertices = {Vec2{c.x_left_bottom, c.y_bottom}, Vec2{c.x_right_bottom, c.y_bottom},
                    Vec2{c.x_right_top, c.y_top}, Vec2{c.x_left_top, c.y_top}};
    cb.cells.push_back(std::move(out));
  }
  return cb;
}

BigInt convergent_q(const NormalizedTorus& torus, std::size_t k) {
  return exact_numbers::convergents(torus.alpha(), k).back().q;
}

}  // namespace

Checkerboard build(const NormalizedTorus& torus, const HorizontalSlit& slit, const ShortSlit& short_slit) {
  Checkerboard cb =
      exact_numbers::with_precision([&](unsigned bits) { return from_arrangement(torus, slit, short_slit, bits); });
  if (slit.N >= QuadraticScalar(1)) cb.q_index = q_index(torus, slit.N);
  return cb;
}

Checkerboard build(const NormalizedTorus& torus, const HorizontalSlit& slit) {
  return build(torus, slit, flat_torus::reduce_slit(torus, slit));
}

Checkerboard build_odd_convergent(const NormalizedTorus& torus, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, kModule, "the odd-convergent closed form needs k >= 1");
  const BigInt q = convergent_q(torus, k);
  const HorizontalSlit slit = flat_torus::make_horizontal_slit(QuadraticScalar(BigInt(2 * q + 1)));
  ShortSlit short_slit = flat_torus::reduce_slit(torus, slit);
  const Real a(torus.a());
  const Real norm = exact_numbers::norm_qalpha(torus.alpha(), k, 160);
  Real B2 = (Real(q) + Real(Rational(1, 2))) * a * norm;
  Real B1 = a - B2;
  const std::size_t index = q_index(torus, slit.N);
  return Checkerboard{torus, slit, std::move(short_slit), a, std::move(B1), std::move(B2), index, {}, Real(0), Real(0),
                      true};
}

Checkerboard build_auto(const NormalizedTorus& torus, std::size_t k, long limit) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, kModule, "odd-convergent checkerboards need k >= 1");
  const BigInt q = convergent_q(torus, k);
  const BigInt N = 2 * q + 1;
  if (N > limit) return build_odd_convergent(torus, k);
  return build(torus, flat_torus::make_horizontal_slit(QuadraticScalar(N)));
}

Checkerboard build_limited(const NormalizedTorus& torus, const HorizontalSlit& slit, long limit) {
  if (slit.N <= QuadraticScalar(limit)) return build(torus, slit);
  if (const std::optional<std::size_t> k = odd_convergent_index(torus, slit.N)) return build_odd_convergent(torus, *k);
  throw Error(ErrorCode::TooLarge, kModule, "slit too long for a cell-by-cell checkerboard and not an odd convergent");
}

std::optional<std::size_t> odd_convergent_index(const NormalizedTorus& torus, const QuadraticScalar& N) {
  if (!N.is_rational() || N.rational_part().get_den() != 1) return std::nullopt;
  const BigInt n = N.rational_part().get_num();
  if (n < 3 || mpz_even_p(n.get_mpz_t())) return std::nullopt;
  const BigInt q = (n - 1) / 2;
  const std::size_t k = q_index(torus, QuadraticScalar(q));
  if (k == 0 || convergent_q(torus, k) != q) return std::nullopt;
  return k;
}

std::size_t q_index(const NormalizedTorus& torus, const QuadraticScalar& N) {
  if (N < QuadraticScalar(1)) throw Error(ErrorCode::InvalidArgument, kModule, "q_index needs N >= 1");
  std::size_t depth = 8;
  const std::optional<std::size_t> known = torus.alpha().known_depth();
  while (true) {
    if (known) depth = std::min(depth, *known);
    const std::vector<exact_numbers::Convergent> conv = exact_numbers::convergents(torus.alpha(), depth);
    if (QuadraticScalar(conv.back().q) > N || (known && depth == *known)) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < conv.size(); ++i) {
        if (QuadraticScalar(conv[i].q) <= N) k = i;
      }
      return k;
    }
    depth *= 2;
  }
}

Real imbalance(const Checkerboard& cb) { return ((cb.B1 - cb.B2) / cb.a).abs(); }

Real signed_imbalance(const Checkerboard& cb) { return (cb.B1 - cb.B2) / cb.a; }

Real exchange_proportion(const Checkerboard& cb) { return cb.B2 / cb.a; }

}  // namespace relorbit::checkerboard
