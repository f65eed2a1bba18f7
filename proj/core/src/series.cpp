#include "warpmean/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace warpmean {

ValidationResult validate_series(const TimeSeries& s) {
  if (s.size() < 2) {
    return ValidationResult::fail("series must have at least 2 samples, got " +
                                  std::to_string(s.size()));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i])) {
      return ValidationResult::fail("non-finite value at sample " + std::to_string(i));
    }
  }
  return ValidationResult::pass();
}

ValidationResult validate_dataset(const Dataset& d) {
  if (d.series.empty()) return ValidationResult::fail("dataset is empty");
  if (!d.labels.empty() && d.labels.size() != d.series.size()) {
    return ValidationResult::fail("label count " + std::to_string(d.labels.size()) +
                                  " does not match series count " +
                                  std::to_string(d.series.size()));
  }
  for (std::size_t i = 0; i < d.series.size(); ++i) {
    if (auto r = validate_series(d.series[i]); !r) {
      return ValidationResult::fail("series " + std::to_string(i) + ": " + r.reason);
    }
  }
  return ValidationResult::pass();
}

ValidationResult validate_path(const WarpingPath& path, int len1, int len2) {
  const auto& w = path.pairs;
  if (w.empty()) return ValidationResult::fail("path is empty");
  if (w.front() != PathPoint{0, 0}) {
    return ValidationResult::fail("first pair is (" + std::to_string(w.front().t1) + "," +
                                  std::to_string(w.front().t2) + "), expected (0,0)");
  }
  if (w.back() != PathPoint{len1 - 1, len2 - 1}) {
    return ValidationResult::fail("last pair is (" + std::to_string(w.back().t1) + "," +
                                  std::to_string(w.back().t2) + "), expected (" +
                                  std::to_string(len1 - 1) + "," + std::to_string(len2 - 1) +
                                  ")");
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const int d1 = w[i + 1].t1 - w[i].t1;
    const int d2 = w[i + 1].t2 - w[i].t2;
    if (d1 < 0 || d2 < 0 || d1 + d2 < 1) {
      return ValidationResult::fail("step " + std::to_string(i) + " (" + std::to_string(d1) +
                                    "," + std::to_string(d2) + ") violates monotonicity");
    }
    const bool basic = (d1 == 1 && d2 == 1) || (d1 == 1 && d2 == 0) || (d1 == 0 && d2 == 1);
    if (!basic) {
      return ValidationResult::fail("step " + std::to_string(i) + " (" + std::to_string(d1) +
                                    "," + std::to_string(d2) + ") not in basic pattern");
    }
  }
  const auto k = w.size();
  const auto lo = static_cast<std::size_t>(std::max(len1, len2));
  const auto hi = static_cast<std::size_t>(len1 + len2 - 1);
  if (k < lo || k > hi) {
    return ValidationResult::fail("path length " + std::to_string(k) + " outside [" +
                                  std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  return ValidationResult::pass();
}

TimeSeries znormalize(const TimeSeries& s) {
  const std::size_t n = s.size();
  double mean = 0.0;
  for (double v : s.values) mean += v;
  mean /= static_cast<double>(n);

  double var = 0.0;
  for (double v : s.values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);  // population variance

  TimeSeries out;
  out.values.resize(n);
  if (var == 0.0) return out;  // constant input maps to all zeros

  const double inv_sd = 1.0 / std::sqrt(var);
  for (std::size_t i = 0; i < n; ++i) out[i] = (s[i] - mean) * inv_sd;
  return out;
}

TimeSeries rescale_unit(const TimeSeries& s) {
  const auto [lo_it, hi_it] = std::minmax_element(s.values.begin(), s.values.end());
  const double lo = *lo_it, hi = *hi_it;

  TimeSeries out;
  out.values.resize(s.size());
  if (hi == lo) return out;

  const double inv_span = 1.0 / (hi - lo);
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = (s[i] - lo) * inv_span;
  return out;
}

}  // namespace warpmean
