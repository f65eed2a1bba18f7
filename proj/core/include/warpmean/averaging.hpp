#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "warpmean/series.hpp"

namespace warpmean {

struct AveragingConfig {
  /// Termination threshold as a fraction of the initial dataset's MSS.
  double threshold_ratio = 0.0005;
  /// Safety cap on iterations; 0 means "derive 50 * N at run time".
  std::size_t max_iterations = 0;
  /// Optional Sakoe-Chiba band applied to every alignment.
  std::optional<int> band;
};

struct TraceEntry {
  double max_ratio = 0.0;  // max pairwise distance / MSS, after the update
  int p = 0;               // replaced pair (p < q)
  int q = 0;
};

struct AveragingResult {
  TimeSeries mean;
  std::vector<double> sigma;      // per-sample phase std dev, same length as mean
  std::vector<TraceEntry> trace;  // one entry per iteration
  std::size_t iterations = 0;
  bool converged = true;  // false iff the iteration cap stopped the loop
};

struct EfficiencyVerdict {
  double f = 0.0;          // iterations / N
  double threshold = 0.0;  // (I*L - N) / (L + N)
  bool twp_wins = false;   // f < threshold
};

/// Mean of two sequences on their in-phase time scale: aligns the pair,
/// reads both series along the lag profile, averages pointwise and keeps
/// every other sample (even tau). Output length ceil((L1+L2-1)/2).
TimeSeries pairwise_mean(const TimeSeries& s1, const TimeSeries& s2,
                         std::optional<int> band = std::nullopt);

/// Length-scaled squared Euclidean distance: with n = max and m = min
/// length, (n/m) * sum of squared differences over the first m samples.
double scaled_euclidean(const TimeSeries& p, const TimeSeries& q);

/// Mean over the dataset of each series' sum of squared amplitudes.
double mss(const Dataset& d);

/// Iterative profile-based averaging: repeatedly replaces the most distant
/// pair (by scaled_euclidean, lowest-index tie-break) with its pairwise
/// mean until the max pairwise distance drops below
/// threshold_ratio * MSS(initial dataset), then returns the pointwise
/// arithmetic mean of the working set. sigma is computed against the
/// original dataset. Hitting the iteration cap is reported via
/// `converged`, not an error.
AveragingResult twp_average(const Dataset& d, const AveragingConfig& cfg);

/// Per-sample standard deviation of the warp functions mapping the mean's
/// time scale onto each original series. For each original, aligns
/// (mean, original) and keeps the first association of every mean sample.
std::vector<double> phase_stddev(const TimeSeries& mean, const Dataset& originals,
                                 std::optional<int> band = std::nullopt);

/// Convergence-cost comparison against DBA: f = iterations/N wins when
/// f < (I*L - N)/(L + N) for DBA iteration count I and series length L.
EfficiencyVerdict efficiency_ratio(std::size_t iterations, std::size_t n_series,
                                   std::size_t mean_length, std::size_t dba_iterations);

}  // namespace warpmean
