#include "warpmean/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "warpmean/dtw.hpp"
#include "warpmean/phase.hpp"

namespace warpmean {

namespace {

// Pointwise arithmetic mean; when lengths differ, each sample averages the
// series that reach it and the output spans the longest member.
TimeSeries coverage_mean(const std::vector<TimeSeries>& series) {
  std::size_t longest = 0;
  for (const auto& s : series) longest = std::max(longest, s.size());

  TimeSeries out;
  out.values.resize(longest, 0.0);
  std::vector<std::size_t> count(longest, 0);
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      out[i] += s[i];
      ++count[i];
    }
  }
  for (std::size_t i = 0; i < longest; ++i) out[i] /= static_cast<double>(count[i]);
  return out;
}

struct MaxEntry {
  double value = 0.0;
  int p = 0;
  int q = 0;
};

// Arg-max over the upper triangle; scanning in index order makes the
// lowest (p,q) win ties.
MaxEntry max_distance(const std::vector<std::vector<double>>& dist) {
  MaxEntry best{-1.0, 0, 0};
  const int n = static_cast<int>(dist.size());
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (dist[p][q] > best.value) best = {dist[p][q], p, q};
    }
  }
  return best;
}

}  // namespace

TimeSeries pairwise_mean(const TimeSeries& s1, const TimeSeries& s2,
                         std::optional<int> band) {
  const auto alignment = dtw_align(s1, s2, StepPattern::basic(), band);
  const auto profile = twp_basic(alignment.path);

  const int total = profile.len1 + profile.len2 - 1;
  TimeSeries out;
  out.values.reserve(static_cast<std::size_t>((total + 1) / 2));

  // Both series read along the in-phase scale, averaged, and down-sampled
  // to every other tau (keeping tau = 0) to undo the doubled sampling rate.
  // Integer positions are path associations; half-integer positions (the
  // midpoint of a diagonal step, reached when the local lag is odd) average
  // the two flanking associations. Flooring them instead would always pick
  // the step's start corner and drift every feature late by half a sample
  // per averaging pass.
  auto sample = [](const TimeSeries& s, double x) {
    const auto i = static_cast<std::size_t>(std::floor(x));
    if (static_cast<double>(i) == x) return s[i];
    return (s[i] + s[i + 1]) * 0.5;
  };
  for (int tau = 0; tau < total; tau += 2) {
    const double phi = profile.phi[tau];
    const double v1 = sample(s1, (tau - phi) * 0.5);
    const double v2 = sample(s2, (tau + phi) * 0.5);
    out.values.push_back((v1 + v2) * 0.5);
  }
  return out;
}

double scaled_euclidean(const TimeSeries& p, const TimeSeries& q) {
  const std::size_t longer = std::max(p.size(), q.size());
  const std::size_t shorter = std::min(p.size(), q.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < shorter; ++i) {
    const double d = p[i] - q[i];
    sum += d * d;
  }
  return static_cast<double>(longer) / static_cast<double>(shorter) * sum;
}

double mss(const Dataset& d) {
  if (auto r = validate_dataset(d); !r) throw std::invalid_argument(r.reason);
  double total = 0.0;
  for (const auto& s : d.series) {
    double sq = 0.0;
    for (double v : s.values) sq += v * v;
    total += sq;
  }
  return total / static_cast<double>(d.size());
}

AveragingResult twp_average(const Dataset& d, const AveragingConfig& cfg) {
  if (auto r = validate_dataset(d); !r) throw std::invalid_argument(r.reason);
  if (!(cfg.threshold_ratio > 0.0)) {
    throw std::invalid_argument("threshold_ratio must be positive");
  }

  const int n = static_cast<int>(d.size());
  AveragingResult result;
  if (n == 1) {
    result.mean = d.series[0];
    result.sigma.assign(result.mean.size(), 0.0);
    return result;
  }

  const double scale = mss(d);  // fixed: thresholds refer to the initial dataset
  const double threshold = cfg.threshold_ratio * scale;
  const std::size_t cap = cfg.max_iterations > 0 ? cfg.max_iterations
                                                 : 50 * static_cast<std::size_t>(n);

  std::vector<TimeSeries> working = d.series;
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      dist[p][q] = dist[q][p] = scaled_euclidean(working[p], working[q]);
    }
  }

  auto current = max_distance(dist);
  while (current.value > threshold && result.iterations < cap) {
    const int p = current.p, q = current.q;
    TimeSeries merged = pairwise_mean(working[p], working[q], cfg.band);
    working[p] = merged;
    working[q] = std::move(merged);

    // Both members now hold the same series; their rows are identical.
    for (int i = 0; i < n; ++i) {
      const double v = (i == p || i == q) ? 0.0 : scaled_euclidean(working[p], working[i]);
      dist[p][i] = dist[i][p] = v;
      dist[q][i] = dist[i][q] = v;
    }

    ++result.iterations;
    current = max_distance(dist);
    result.trace.push_back({current.value / scale, p, q});
  }
  result.converged = current.value <= threshold;

  result.mean = coverage_mean(working);
  result.sigma = phase_stddev(result.mean, d, cfg.band);
  return result;
}

std::vector<double> phase_stddev(const TimeSeries& mean, const Dataset& originals,
                                 std::optional<int> band) {
  if (auto r = validate_series(mean); !r) throw std::invalid_argument(r.reason);
  if (auto r = validate_dataset(originals); !r) throw std::invalid_argument(r.reason);

  const std::size_t len = mean.size();
  std::vector<double> acc(len, 0.0);

  for (const auto& s : originals.series) {
    const auto alignment = dtw_align(mean, s, StepPattern::basic(), band);
    // Warp function onto this member: keep the first association of each
    // mean sample, discarding the repeats a vertical run produces.
    std::vector<int> mapped(len, -1);
    for (const auto& pp : alignment.path.pairs) {
      if (mapped[pp.t1] < 0) mapped[pp.t1] = pp.t2;
    }
    for (std::size_t t = 0; t < len; ++t) {
      const double dev = static_cast<double>(mapped[t]) - static_cast<double>(t);
      acc[t] += dev * dev;
    }
  }

  const double inv_n = 1.0 / static_cast<double>(originals.size());
  std::vector<double> sigma(len);
  for (std::size_t t = 0; t < len; ++t) sigma[t] = std::sqrt(acc[t] * inv_n);
  return sigma;
}

EfficiencyVerdict efficiency_ratio(std::size_t iterations, std::size_t n_series,
                                   std::size_t mean_length, std::size_t dba_iterations) {
  EfficiencyVerdict v;
  const double n = static_cast<double>(n_series);
  const double len = static_cast<double>(mean_length);
  v.f = static_cast<double>(iterations) / n;
  v.threshold = (static_cast<double>(dba_iterations) * len - n) / (len + n);
  v.twp_wins = v.f < v.threshold;
  return v;
}

}  // namespace warpmean
