#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "relorbit/error.hpp"
#include "relorbit/experiments/experiments.hpp"

using namespace relorbit;
using namespace relorbit::experiments;
using exact_numbers::Rational;
using flat_torus::NormalizedTorus;

namespace {

ELocusSurface surface_of(const char* id, TremorParam tremor, QuadraticScalar a = QuadraticScalar(1)) {
  return slit_surface::make_surface(NormalizedTorus(std::move(a), RealSpec::builtin(id)), QuadraticScalar(1),
                                    std::move(tremor));
}

const TremorParam kUnit{QuadraticScalar(1), QuadraticScalar(0)};

// Small cell budget: the closed form takes over early and keeps the tests fast.
TrajectoryOptions quick() {
  TrajectoryOptions o;
  o.cell_limit = 4096;
  return o;
}

// Equal up to enclosure width.
bool close(const Real& x, const Real& y) { return (x - y).abs().to_double() < 1e-30; }

}  // namespace

TEST_CASE("golden trajectory keeps its gap") {
  const std::vector<RecurrenceRecord> r = recurrence_trajectory(surface_of("golden", kUnit), 10);
  REQUIRE(r.size() == 10);
  long f0 = 1, f1 = 2;  // q_1, q_2 for the golden ratio
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(r[i].j == i + 1);
    CHECK(r[i].gap >= Real(Rational(19, 100)));
    CHECK(r[i].t == Real(2 * f0));
    CHECK(r[i].theta * Real(1) == r[i].s);
    CHECK(r[i].gap == r[i].theta);
    if (i > 0) CHECK(r[i - 1].t < r[i].t);
    const long next = f0 + f1;
    f0 = f1;
    f1 = next;
  }
  const RecurrenceVerdict v = classify_recurrence(r, kDefaultEpsDist, 0.1);
  CHECK(std::holds_alternative<SeparatedEvidence>(v));
  CHECK(std::get<SeparatedEvidence>(v).min_gap >= 0.19);
}

TEST_CASE("theta sits in the Khinchin sandwich") {
  for (const char* id : {"golden", "sqrt2m1", "sqrt3m1", "pow2", "factorial"}) {
    const ELocusSurface m = surface_of(id, kUnit);
    const std::size_t depth = 8;
    const std::vector<RecurrenceRecord> r = recurrence_trajectory(m, depth, quick());
    const std::vector<exact_numbers::Convergent> c = exact_numbers::convergents(m.torus.alpha(), depth + 1);
    for (const RecurrenceRecord& rec : r) {
      const Real half = Real(rec.q) + Real(Rational(1, 2));
      CHECK(rec.q == c[rec.j].q);
      CHECK(half / Real(BigInt(c[rec.j + 1].q + c[rec.j].q)) < rec.theta);
      CHECK(rec.theta < half / Real(c[rec.j + 1].q));
      CHECK(close(rec.theta, rec.s));
      CHECK(close(rec.B1 + rec.B2, Real(1)));
    }
  }
}

TEST_CASE("scaled torus keeps theta = s / a") {
  const QuadraticScalar a(Rational(3, 2));
  const std::vector<RecurrenceRecord> r = recurrence_trajectory(surface_of("sqrt2m1", kUnit, a), 6);
  for (const RecurrenceRecord& rec : r) {
    CHECK(rec.theta * Real(a) == rec.s);
    CHECK(rec.t == Real(BigInt(2 * rec.q)) * Real(a));
  }
}

TEST_CASE("well-approximable trajectory returns") {
  const std::vector<RecurrenceRecord> r = recurrence_trajectory(surface_of("pow2", kUnit), 12, quick());
  REQUIRE(r.size() == 12);
  bool witnessed = false;
  for (const RecurrenceRecord& rec : r) {
    if (rec.s.to_double() < 1e-3) {
      CHECK(rec.distance < 1e-2);
      witnessed = true;
    }
  }
  CHECK(witnessed);
  CHECK(r.back().distance < 1e-2);
  const RecurrenceVerdict v = classify_recurrence(r, 1e-2, 0.1);
  REQUIRE(std::holds_alternative<RecurrentEvidence>(v));
  CHECK(!std::get<RecurrentEvidence>(v).indices.empty());
}

TEST_CASE("depth one") {
  for (const char* id : {"golden", "sqrt3m1", "pow2"}) {
    const ELocusSurface m = surface_of(id, kUnit);
    const std::vector<RecurrenceRecord> r = recurrence_trajectory(m, 1);
    REQUIRE(r.size() == 1);
    const BigInt q1 = exact_numbers::convergents(m.torus.alpha(), 1).back().q;
    CHECK(r[0].t == Real(BigInt(2 * q1)));
  }
  CHECK_THROWS_AS(recurrence_trajectory(surface_of("golden", kUnit), 0), Error);
}

TEST_CASE("trajectory preconditions") {
  ELocusSurface m = surface_of("golden", kUnit);
  m.slit.N = QuadraticScalar(3);
  CHECK_THROWS_AS(recurrence_trajectory(m, 3), Error);
}

TEST_CASE("classifier") {
  try {
    classify_recurrence({}, 1e-2, 0.1);
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyInput);
  }
  RecurrenceRecord far;
  far.q = 1;
  far.s = Real(Rational(1, 2));
  far.theta = Real(Rational(1, 2));
  far.distance = 0.5;
  far.gap = Real(Rational(1, 20));
  const RecurrenceVerdict v = classify_recurrence({far, far}, 1e-2, 0.1);
  CHECK(std::holds_alternative<Inconclusive>(v));
  CHECK(verdict_name(v) == "Inconclusive");
  CHECK(std::holds_alternative<SeparatedEvidence>(classify_recurrence({far}, 1e-2, 0.01)));
  RecurrenceRecord near = far;
  near.s = Real(Rational(1, 10000));
  near.theta = near.s;
  near.distance = 1e-4;
  const RecurrenceVerdict w = classify_recurrence({far, near}, 1e-2, 0.01);
  REQUIRE(std::holds_alternative<RecurrentEvidence>(w));
  CHECK(std::get<RecurrentEvidence>(w).indices == std::vector<std::size_t>{1});
}

TEST_CASE("theorem check") {
  const TheoremReport g = theorem_check(RealSpec::builtin("golden"), kUnit, 20, 1, kDefaultEpsDist, -1, quick());
  CHECK(std::holds_alternative<exact_numbers::BadlyApproxEvidence>(g.cf_verdict));
  CHECK(std::holds_alternative<SeparatedEvidence>(g.empirical_verdict));
  CHECK(g.agree);
  CHECK(g.records.size() == 20);

  const TheoremReport p = theorem_check(RealSpec::builtin("pow2"), kUnit, 12, 10, kDefaultEpsDist, -1, quick());
  CHECK(std::holds_alternative<exact_numbers::WellApproxEvidence>(p.cf_verdict));
  CHECK(std::holds_alternative<RecurrentEvidence>(p.empirical_verdict));
  CHECK(p.agree);

  try {
    theorem_check(RealSpec::builtin("golden"), {QuadraticScalar(2), QuadraticScalar(2)}, 5);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisViolated);
  }
}

TEST_CASE("builtin suite agrees at depth 12") {
  for (const std::string& id : RealSpec::builtin_ids()) {
    const TheoremReport r = theorem_check(RealSpec::builtin(id), kUnit, 12, 10, kDefaultEpsDist, -1, quick());
    INFO(id);
    CHECK(r.agree);
  }
}

TEST_CASE("determinism and thread independence") {
  const ELocusSurface m = surface_of("sqrt3m1", {QuadraticScalar(Rational(1, 3)), QuadraticScalar(-1)});
  TrajectoryOptions one;
  one.threads = 1;
  TrajectoryOptions two;
  two.threads = 2;
  const std::string a = records_csv(recurrence_trajectory(m, 9, one));
  const std::string b = records_csv(recurrence_trajectory(m, 9, two));
  const std::string c = records_csv(recurrence_trajectory(m, 9, one));
  CHECK(a == b);
  CHECK(a == c);
  std::istringstream in(a);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("j,q_j,t_j,norm,s_j,theta,imbalance,distance,gap", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 10);
}

TEST_CASE("approximation constants and region bounds") {
  const ApproximationConstants k = approximation_constants(RealSpec::builtin("golden"), 25);
  CHECK(k.c == doctest::Approx(0.381966).epsilon(1e-5));
  CHECK(k.c_prime == doctest::Approx(0.5));
  const std::vector<double> b = region_lower_bounds(1, 0.5, k);
  REQUIRE(b.size() == 4);
  CHECK(b[0] == doctest::Approx(0.25 * k.c));
  CHECK(b[1] == doctest::Approx(0.25 * 0.25 * k.c * k.c / 4));
  CHECK(b[2] == doctest::Approx(0.25 * k.c * k.c / 4));
  CHECK(b[3] == doctest::Approx(0.5 * 0.5 * k.c / 2));
  CHECK(*std::min_element(b.begin(), b.end()) == doctest::Approx(0.00228).epsilon(1e-2));
}

TEST_CASE("intermediate times stay separated") {
  const ELocusSurface m = surface_of("golden", {QuadraticScalar(1), QuadraticScalar(-1)});
  const ApproximationConstants k = approximation_constants(m.torus.alpha(), 25);
  const std::vector<double> b = region_lower_bounds(1, 0.5, k);
  const double c3 = *std::min_element(b.begin(), b.end());
  const std::vector<SweepRecord> s = intermediate_time_sweep(m, 3, 20, 7);
  CHECK(s.size() == 60);
  for (const SweepRecord& r : s) {
    CHECK(min(r.B1, r.B2).to_double() >= c3);
    CHECK(r.gap == Real(2) * r.B2);
  }
  const std::vector<SweepRecord> again = intermediate_time_sweep(m, 3, 20, 7);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i].N == again[i].N);
}
