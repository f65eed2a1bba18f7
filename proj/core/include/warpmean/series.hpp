#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace warpmean {

/// Uniformly sampled univariate sequence. The sample index is implicit
/// (0..size()-1); amplitudes are stored as doubles.
struct TimeSeries {
  std::vector<double> values;

  TimeSeries() = default;
  TimeSeries(std::initializer_list<double> init) : values(init) {}
  explicit TimeSeries(std::vector<double> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }

  bool operator==(const TimeSeries&) const = default;
};

/// A collection of series with optional per-series class labels.
/// labels is either empty or has exactly one entry per series.
struct Dataset {
  std::vector<TimeSeries> series;
  std::vector<std::string> labels;

  std::size_t size() const { return series.size(); }
};

/// One association between sample t1 of the first series and sample t2 of
/// the second.
struct PathPoint {
  int t1 = 0;
  int t2 = 0;

  bool operator==(const PathPoint&) const = default;
};

/// Ordered index associations between two sequences, as produced by DTW.
struct WarpingPath {
  std::vector<PathPoint> pairs;

  std::size_t size() const { return pairs.size(); }
};

/// Outcome of a validation check; on failure `reason` names the first
/// violated clause.
struct ValidationResult {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }

  static ValidationResult pass() { return {}; }
  static ValidationResult fail(std::string why) { return {false, std::move(why)}; }
};

ValidationResult validate_series(const TimeSeries& s);
ValidationResult validate_dataset(const Dataset& d);

/// Checks a warping path against the single-forward-step pattern for series
/// of lengths len1 and len2: endpoints (0,0) and (len1-1,len2-1), monotone
/// steps from {(1,1),(1,0),(0,1)}, and max(len1,len2) <= k <= len1+len2-1.
ValidationResult validate_path(const WarpingPath& path, int len1, int len2);

/// Shifts and scales to sample mean 0 and population standard deviation 1.
/// A constant series maps to all zeros.
TimeSeries znormalize(const TimeSeries& s);

/// Affine rescale of the value range to [0,1]. A constant series maps to
/// all zeros.
TimeSeries rescale_unit(const TimeSeries& s);

}  // namespace warpmean
