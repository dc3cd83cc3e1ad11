#include "relorbit/experiments/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "relorbit/error.hpp"
#include "relorbit/exact_numbers/scalar_format.hpp"

namespace relorbit::experiments {
namespace {

constexpr const char* kModule = "experiments";

unsigned thread_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("REL_ORBIT_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

RecurrenceRecord make_record(const ELocusSurface& surface, const slit_surface::PeriodTuple& start, std::size_t j,
                             const BigInt& q, const TrajectoryOptions& options) {
  const QuadraticScalar& a = surface.torus.a();
  RecurrenceRecord r;
  r.j = j;
  r.q = q;
  const QuadraticScalar t = QuadraticScalar(BigInt(2 * q)) * a;
  r.t = Real(t);
  const ELocusSurface moved = slit_surface::rel(surface, t);
  const checkerboard::Checkerboard cb = checkerboard::build_auto(surface.torus, j, options.cell_limit);
  r.closed_form = cb.closed_form;
  r.norm = exact_numbers::norm_qalpha(surface.torus.alpha(), j, 160);
  r.s = (Real(q) + Real(exact_numbers::Rational(1, 2))) * r.norm * Real(a);
  r.imbalance = checkerboard::imbalance(cb);
  r.theta = checkerboard::exchange_proportion(cb);
  r.B1 = cb.B1;
  r.B2 = cb.B2;
  r.gap = slit_surface::tremor_holonomy_gap(moved, cb);
  r.distance = slit_surface::stratum_pseudodistance(slit_surface::canonical_tuple(moved, cb), start);
  return r;
}

std::string decimal(const Real& x) { return exact_numbers::to_decimal(x, 40); }

}  // namespace

std::vector<RecurrenceRecord> recurrence_trajectory(const ELocusSurface& surface, std::size_t depth,
                                                    const TrajectoryOptions& options) {
  if (depth == 0) throw Error(ErrorCode::DepthZero, kModule, "trajectory depth must be at least 1");
  if (surface.slit.N != QuadraticScalar(1)) {
    throw Error(ErrorCode::InvalidArgument, kModule, "trajectories start from a slit of length a (N = 1)");
  }
  const std::vector<exact_numbers::Convergent> conv = exact_numbers::convergents(surface.torus.alpha(), depth);
  const slit_surface::PeriodTuple start = slit_surface::period_tuple(surface);
  std::vector<RecurrenceRecord> records(depth);
  std::vector<std::exception_ptr> errors(depth);
  std::atomic<std::size_t> next{0};
  // Largest q first keeps the threads evenly loaded.
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < depth;) {
      const std::size_t j = depth - i;
      try {
        records[j - 1] = make_record(surface, start, j, conv[j].q, options);
      } catch (...) {
        errors[j - 1] = std::current_exception();
      }
    }
  };
  const unsigned n = thread_count(options.threads, depth);
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

RecurrenceVerdict classify_recurrence(const std::vector<RecurrenceRecord>& records, double eps_dist, double eps_gap) {
  if (records.empty()) throw Error(ErrorCode::EmptyInput, kModule, "no records to classify");
  RecurrentEvidence rec;
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const RecurrenceRecord& r = records[i];
    if (r.distance < eps_dist && r.theta.to_double() < eps_dist) rec.indices.push_back(i);
    min_gap = std::min(min_gap, r.gap.to_double());
  }
  if (!rec.indices.empty()) return rec;
  if (eps_gap > 0 && min_gap >= eps_gap) return SeparatedEvidence{min_gap};
  return Inconclusive{};
}

std::string verdict_name(const RecurrenceVerdict& v) {
  if (std::holds_alternative<RecurrentEvidence>(v)) return "RecurrentEvidence";
  if (std::holds_alternative<SeparatedEvidence>(v)) return "SeparatedEvidence";
  return "Inconclusive";
}

std::string verdict_name(const exact_numbers::ApproximabilityVerdict& v) {
  return std::holds_alternative<exact_numbers::BadlyApproxEvidence>(v) ? "BadlyApprox" : "WellApprox";
}

TheoremReport theorem_check(const RealSpec& alpha, const TremorParam& tremor, std::size_t depth, long K,
                            double eps_dist, double eps_gap, const TrajectoryOptions& options) {
  if (tremor.a1 == tremor.a2) {
    throw Error(ErrorCode::HypothesisViolated, kModule, "equal shears reduce the tremor to the horocycle flow");
  }
  if (depth == 0) throw Error(ErrorCode::DepthZero, kModule, "depth must be at least 1");
  if (K < 1) throw Error(ErrorCode::InvalidArgument, kModule, "K must be at least 1");
  if (eps_gap <= 0) eps_gap = kDefaultEpsGapFactor * (tremor.a1 - tremor.a2).abs().to_double();
  const ELocusSurface surface =
      slit_surface::make_surface(flat_torus::NormalizedTorus(QuadraticScalar(1), alpha), QuadraticScalar(1), tremor);
  TheoremReport report{exact_numbers::badly_approximable_to_depth(alpha, depth, BigInt(K)), Inconclusive{}, false, {}};
  report.records = recurrence_trajectory(surface, depth, options);
  report.empirical_verdict = classify_recurrence(report.records, eps_dist, eps_gap);
  const bool badly = std::holds_alternative<exact_numbers::BadlyApproxEvidence>(report.cf_verdict);
  report.agree = badly ? std::holds_alternative<SeparatedEvidence>(report.empirical_verdict)
                       : std::holds_alternative<RecurrentEvidence>(report.empirical_verdict);
  return report;
}

ApproximationConstants approximation_constants(const RealSpec& alpha, std::size_t depth) {
  const std::vector<exact_numbers::Convergent> conv = exact_numbers::convergents(alpha, depth + 1);
  ApproximationConstants k{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i <= depth; ++i) {
    k.c = std::min(k.c, exact_numbers::approx_quality(alpha, i).to_double());
    k.c_prime = std::min(k.c_prime, conv[i].q.get_d() / conv[i + 1].q.get_d());
  }
  return k;
}

std::vector<double> region_lower_bounds(double a, double t, const ApproximationConstants& k) {
  const double c = k.c;
  const double cp = k.c_prime;
  return {a * (1 - t) * c / 2, a * t * t * cp * cp * c * c / 4, a * t * t * c * c / 4, a * (1 - t) * cp * c / 2};
}

std::vector<SweepRecord> intermediate_time_sweep(const ELocusSurface& surface, unsigned decades, unsigned per_decade,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SweepRecord> out;
  long lo = 1;
  for (unsigned d = 0; d < decades; ++d, lo *= 10) {
    // N = 1 makes I and I' coincide.
    std::uniform_int_distribution<long> pick(std::max(lo, 2L), 10 * lo - 1);
    for (unsigned i = 0; i < per_decade; ++i) {
      const QuadraticScalar N(pick(rng));
      const ELocusSurface moved =
          slit_surface::rel(surface, (N - surface.slit.N) * surface.torus.a());
      const checkerboard::Checkerboard cb = checkerboard::build(moved.torus, moved.slit);
      out.push_back({N, cb.B1, cb.B2, slit_surface::tremor_holonomy_gap(moved, cb)});
    }
  }
  return out;
}

std::string records_csv(const std::vector<RecurrenceRecord>& records) {
  std::ostringstream out;
  out << "j,q_j,t_j,norm,s_j,theta,imbalance,distance,gap,theta_exact,gap_exact\n";
  for (const RecurrenceRecord& r : records) {
    out << r.j << ',' << r.q.get_str() << ',' << decimal(r.t) << ',' << decimal(r.norm) << ',' << decimal(r.s) << ','
        << decimal(r.theta) << ',' << decimal(r.imbalance) << ','
        << exact_numbers::to_decimal(Real(exact_numbers::Rational(r.distance)), 40) << ',' << decimal(r.gap) << ",\""
        << exact_numbers::format_exact(r.theta) << "\",\"" << exact_numbers::format_exact(r.gap) << "\"\n";
  }
  return out.str();
}

}  // namespace relorbit::experiments
