#include "warpmean/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "warpmean/dtw.hpp"
#include "warpmean/phase.hpp"
#include "warpmean/rng.hpp"

namespace warpmean {

TimeSeries dba_step(const TimeSeries& mean, const Dataset& d, std::optional<int> band) {
  if (auto r = validate_series(mean); !r) throw std::invalid_argument(r.reason);
  if (auto r = validate_dataset(d); !r) throw std::invalid_argument(r.reason);

  const std::size_t len = mean.size();
  std::vector<double> sum(len, 0.0);
  std::vector<std::size_t> count(len, 0);

  for (const auto& s : d.series) {
    const auto alignment = dtw_align(mean, s, StepPattern::basic(), band);
    for (const auto& pp : alignment.path.pairs) {
      sum[pp.t1] += s[pp.t2];
      ++count[pp.t1];
    }
  }

  TimeSeries out;
  out.values.resize(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = sum[i] / static_cast<double>(count[i]);
  return out;
}

TimeSeries dba_average(const Dataset& d, std::size_t iterations, std::uint64_t seed,
                       std::optional<int> band) {
  if (auto r = validate_dataset(d); !r) throw std::invalid_argument(r.reason);
  if (iterations < 1) throw std::invalid_argument("DBA needs at least one iteration");

  std::mt19937_64 rng(seed);
  TimeSeries mean = d.series[uniform_index(rng, d.size())];
  for (std::size_t it = 0; it < iterations; ++it) mean = dba_step(mean, d, band);
  return mean;
}

TimeSeries psa_pairwise_mean(const TimeSeries& s1, const TimeSeries& s2) {
  const auto alignment = dtw_align(s1, s2);
  const auto& pairs = alignment.path.pairs;
  const std::size_t k = pairs.size();

  std::vector<double> along_path(k);
  for (std::size_t i = 0; i < k; ++i) {
    along_path[i] = (s1[pairs[i].t1] + s2[pairs[i].t2]) * 0.5;
  }

  // Uniform rescale of the path-length average back to the mean length of
  // the inputs. k >= target always, and k == target only for the pure
  // diagonal, which the interpolation leaves untouched.
  const std::size_t target = (s1.size() + s2.size() + 1) / 2;
  TimeSeries out;
  if (k == target) {
    out.values = std::move(along_path);
    return out;
  }
  out.values.resize(target);
  const double step = static_cast<double>(k - 1) / static_cast<double>(target - 1);
  for (std::size_t j = 0; j < target; ++j) {
    const double x = static_cast<double>(j) * step;
    const auto i0 = std::min(static_cast<std::size_t>(x), k - 2);
    const double frac = x - static_cast<double>(i0);
    out[j] = along_path[i0] + frac * (along_path[i0 + 1] - along_path[i0]);
  }
  return out;
}

TimeSeries psa_average(const Dataset& d) {
  if (auto r = validate_dataset(d); !r) throw std::invalid_argument(r.reason);

  std::vector<TimeSeries> pool = d.series;
  std::vector<bool> alive(pool.size(), true);
  std::size_t remaining = pool.size();

  const std::size_t n = pool.size();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      dist[p][q] = dtw_distance(pool[p], pool[q]);
    }
  }

  while (remaining > 1) {
    std::size_t bp = 0, bq = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < n; ++p) {
      if (!alive[p]) continue;
      for (std::size_t q = p + 1; q < n; ++q) {
        if (!alive[q]) continue;
        if (dist[p][q] < best) {
          best = dist[p][q];
          bp = p;
          bq = q;
        }
      }
    }

    pool[bp] = psa_pairwise_mean(pool[bp], pool[bq]);
    alive[bq] = false;
    --remaining;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i] || i == bp) continue;
      const double v = dtw_distance(pool[std::min(i, bp)], pool[std::max(i, bp)]);
      dist[std::min(i, bp)][std::max(i, bp)] = v;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) return pool[i];
  }
  return pool[0];  // unreachable
}

double wgss(const Dataset& d, const TimeSeries& mean, WgssMetric metric,
            std::optional<int> band) {
  if (auto r = validate_dataset(d); !r) throw std::invalid_argument(r.reason);
  if (auto r = validate_series(mean); !r) throw std::invalid_argument(r.reason);

  double total = 0.0;
  for (const auto& s : d.series) {
    double dist = 0.0;
    switch (metric) {
      case WgssMetric::dtw:
        dist = dtw_distance(mean, s);
        break;
      case WgssMetric::phase:
        dist = phase_distance(twp_basic(dtw_align(mean, s, StepPattern::basic(), band).path));
        break;
      case WgssMetric::tam:
        dist = tam_from_profile(twp_basic(dtw_align(mean, s, StepPattern::basic(), band).path))
                   .gamma;
        break;
    }
    total += dist * dist;
  }
  return total;
}

}  // namespace warpmean
