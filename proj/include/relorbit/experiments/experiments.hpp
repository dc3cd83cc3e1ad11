#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "relorbit/checkerboard/checkerboard.hpp"
#include "relorbit/exact_numbers/continued_fraction.hpp"
#include "relorbit/slit_surface/slit_surface.hpp"

namespace relorbit::experiments {

using exact_numbers::BigInt;
using exact_numbers::QuadraticScalar;
using exact_numbers::Real;
using exact_numbers::RealSpec;
using slit_surface::ELocusSurface;
using slit_surface::TremorParam;

struct RecurrenceRecord {
  std::size_t j = 0;
  BigInt q;
  Real t;          // 2 q_j a
  Real norm;       // ||q_j alpha||
  Real s;          // (q_j + 1/2) ||q_j alpha|| a
  Real imbalance;
  Real theta;
  double distance = 0;
  Real gap;
  Real B1;
  Real B2;
  bool closed_form = false;
};

struct TrajectoryOptions {
  long cell_limit = checkerboard::kDefaultCellLimit;
  // 0: hardware concurrency, capped by REL_ORBIT_THREADS.
  unsigned threads = 0;
};

// Records for j = 1..depth along t_j = 2 q_j a; the surface must have N = 1.
std::vector<RecurrenceRecord> recurrence_trajectory(const ELocusSurface& surface, std::size_t depth,
                                                    const TrajectoryOptions& options = {});

struct RecurrentEvidence {
  std::vector<std::size_t> indices;  // record positions with small distance and small s_j / a
};
struct SeparatedEvidence {
  double min_gap;
};
struct Inconclusive {};
using RecurrenceVerdict = std::variant<RecurrentEvidence, SeparatedEvidence, Inconclusive>;

RecurrenceVerdict classify_recurrence(const std::vector<RecurrenceRecord>& records, double eps_dist, double eps_gap);

std::string verdict_name(const RecurrenceVerdict& v);
std::string verdict_name(const exact_numbers::ApproximabilityVerdict& v);

struct TheoremReport {
  exact_numbers::ApproximabilityVerdict cf_verdict;
  RecurrenceVerdict empirical_verdict;
  bool agree = false;
  std::vector<RecurrenceRecord> records;
};

inline constexpr double kDefaultEpsDist = 1e-2;
// Relative to |a1 - a2|.
inline constexpr double kDefaultEpsGapFactor = 0.1;

// a = 1, N = 1. Throws HypothesisViolated when a1 == a2.
TheoremReport theorem_check(const RealSpec& alpha, const TremorParam& tremor, std::size_t depth, long K = 10,
                            double eps_dist = kDefaultEpsDist, double eps_gap = -1, const TrajectoryOptions& options = {});

// Empirical constants over k = 0..depth: c = min q_k ||q_k alpha||, c' = min q_k / q_{k+1}.
struct ApproximationConstants {
  double c;
  double c_prime;
};
ApproximationConstants approximation_constants(const RealSpec& alpha, std::size_t depth);

// The four region lower bounds a(1-t)c/2, a t^2 c'^2 c^2/4, a t^2 c^2/4, a(1-t)c'c/2.
std::vector<double> region_lower_bounds(double a, double t, const ApproximationConstants& k);

struct SweepRecord {
  QuadraticScalar N;
  Real B1;
  Real B2;
  Real gap;
};
// per_decade random integer slit lengths in each [10^d, 10^(d+1)), d = 0..decades-1.
std::vector<SweepRecord> intermediate_time_sweep(const ELocusSurface& surface, unsigned decades,
                                                 unsigned per_decade = 20, std::uint64_t seed = 1);

std::string records_csv(const std::vector<RecurrenceRecord>& records);

}  // namespace relorbit::experiments
