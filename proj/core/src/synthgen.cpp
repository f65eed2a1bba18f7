#include "warpmean/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "warpmean/dtw.hpp"
#include "warpmean/phase.hpp"
#include "warpmean/rng.hpp"

namespace warpmean {

namespace {

// Minimum spacing (samples) enforced between consecutive drawn landmark
// times, and between the ends of the series and the outermost landmarks.
constexpr int kMinGap = 4;

double shape_height(const ShapeSpec& spec) {
  double h = 0.0;
  for (const auto& lm : spec.landmarks) h = std::max(h, std::abs(lm.nominal_amplitude));
  return h;
}

void add_noise(TimeSeries& s, const ShapeSpec& spec, double amplitude,
               std::mt19937_64& rng) {
  if (amplitude <= 0.0) return;
  for (double& v : s.values) {
    v += spec.noise == NoiseKind::uniform ? uniform_real(rng, -amplitude, amplitude)
                                          : normal_real(rng, 0.0, amplitude);
  }
}

}  // namespace

ShapeSpec ShapeSpec::defaults() {
  ShapeSpec spec;
  spec.landmarks = {
      {85.0, 1.00, 38.0, false, 0.0, 0.0},
      {165.0, -0.80, 28.0, true, -0.95, -0.65},
      {240.0, 0.85, 24.0, true, 0.70, 1.00},
      {310.0, -0.75, 25.0, false, 0.0, 0.0},
      {378.0, 0.95, 27.0, true, 0.80, 1.10},
      {445.0, -0.65, 30.0, false, 0.0, 0.0},
  };
  return spec;
}

ValidationResult validate_spec(const ShapeSpec& spec) {
  if (spec.landmarks.size() != 6) {
    return ValidationResult::fail("expected 6 landmarks, got " +
                                  std::to_string(spec.landmarks.size()));
  }
  int randomized = 0;
  for (std::size_t i = 0; i < spec.landmarks.size(); ++i) {
    const auto& lm = spec.landmarks[i];
    if (i > 0 && !(lm.nominal_time > spec.landmarks[i - 1].nominal_time)) {
      return ValidationResult::fail("landmark times must be strictly increasing");
    }
    if (lm.time_sigma < 0.0) return ValidationResult::fail("negative time_sigma");
    if (lm.amplitude_randomized) {
      ++randomized;
      if (!(lm.amplitude_lo <= lm.amplitude_hi)) {
        return ValidationResult::fail("landmark " + std::to_string(i) +
                                      ": amplitude range is inverted");
      }
    }
  }
  if (randomized != 3) {
    return ValidationResult::fail("expected exactly 3 amplitude-randomized landmarks, got " +
                                  std::to_string(randomized));
  }
  if (spec.total_length < 8 * kMinGap) return ValidationResult::fail("total_length too small");
  if (spec.noise_amplitude_ratio < 0.0) {
    return ValidationResult::fail("negative noise_amplitude_ratio");
  }
  if (!(spec.lead_in_time >= 0.0 &&
        spec.lead_in_time + 2 * kMinGap < spec.landmarks.front().nominal_time)) {
    return ValidationResult::fail("lead_in_time must leave room before the first landmark");
  }
  return ValidationResult::pass();
}

TimeSeries render_shape(const ShapeSpec& spec, const std::vector<double>& times,
                        const std::vector<double>& amplitudes) {
  struct Vertex {
    double x, y;
  };
  std::vector<Vertex> poly;
  poly.push_back({0.0, 0.0});
  if (spec.lead_in_time > 0.0) poly.push_back({spec.lead_in_time, 0.0});
  for (std::size_t i = 0; i < times.size(); ++i) poly.push_back({times[i], amplitudes[i]});
  poly.push_back({static_cast<double>(spec.total_length - 1), 0.0});

  TimeSeries out;
  out.values.resize(static_cast<std::size_t>(spec.total_length));
  std::size_t seg = 0;
  for (int i = 0; i < spec.total_length; ++i) {
    const double x = static_cast<double>(i);
    while (seg + 2 < poly.size() && poly[seg + 1].x <= x) ++seg;
    const auto& a = poly[seg];
    const auto& b = poly[seg + 1];
    if (x <= a.x) {
      out[i] = a.y;  // exact at (integer) vertex positions
    } else if (x >= b.x) {
      out[i] = b.y;
    } else {
      out[i] = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    }
  }
  return out;
}

SyntheticData generate_dataset(const ShapeSpec& spec, std::size_t n_series,
                               std::uint64_t seed) {
  if (auto r = validate_spec(spec); !r) throw std::invalid_argument(r.reason);
  if (n_series < 2) throw std::invalid_argument("need at least 2 series");

  const std::size_t n_lm = spec.landmarks.size();
  const double noise_amp = spec.noise_amplitude_ratio * shape_height(spec);
  std::mt19937_64 rng(seed);

  SyntheticData data;
  data.draws.reserve(n_series);

  for (std::size_t s = 0; s < n_series; ++s) {
    SeriesDraw draw;
    draw.times.resize(n_lm);
    draw.amplitudes.resize(n_lm);

    // Landmark times: Gaussian per landmark, clamped forward to preserve
    // ordering, and rounded so each lands on an exact sample.
    int prev = static_cast<int>(std::lround(spec.lead_in_time));
    for (std::size_t j = 0; j < n_lm; ++j) {
      const auto& lm = spec.landmarks[j];
      const int lo = prev + kMinGap;
      const int hi = spec.total_length - 1 -
                     kMinGap * static_cast<int>(n_lm - j);  // room for the rest
      double t = normal_real(rng, lm.nominal_time, lm.time_sigma);
      int ti = static_cast<int>(std::lround(t));
      ti = std::clamp(ti, lo, hi);
      draw.times[j] = ti;
      prev = ti;
    }
    for (std::size_t j = 0; j < n_lm; ++j) {
      const auto& lm = spec.landmarks[j];
      draw.amplitudes[j] = lm.amplitude_randomized
                               ? uniform_real(rng, lm.amplitude_lo, lm.amplitude_hi)
                               : lm.nominal_amplitude;
    }

    std::vector<double> times(draw.times.begin(), draw.times.end());
    TimeSeries rendered = render_shape(spec, times, draw.amplitudes);
    add_noise(rendered, spec, noise_amp, rng);

    data.dataset.series.push_back(std::move(rendered));
    data.draws.push_back(std::move(draw));
  }

  // Ground truth from the values actually drawn: per-landmark sample mean
  // and (n-1) standard deviation.
  auto& gt = data.ground_truth;
  gt.landmark_mean_times.assign(n_lm, 0.0);
  gt.landmark_time_sigmas.assign(n_lm, 0.0);
  gt.landmark_mean_amplitudes.assign(n_lm, 0.0);
  for (const auto& draw : data.draws) {
    for (std::size_t j = 0; j < n_lm; ++j) {
      gt.landmark_mean_times[j] += draw.times[j];
      gt.landmark_mean_amplitudes[j] += draw.amplitudes[j];
    }
  }
  const double inv_n = 1.0 / static_cast<double>(n_series);
  for (std::size_t j = 0; j < n_lm; ++j) {
    gt.landmark_mean_times[j] *= inv_n;
    gt.landmark_mean_amplitudes[j] *= inv_n;
  }
  for (const auto& draw : data.draws) {
    for (std::size_t j = 0; j < n_lm; ++j) {
      const double dev = draw.times[j] - gt.landmark_mean_times[j];
      gt.landmark_time_sigmas[j] += dev * dev;
    }
  }
  for (std::size_t j = 0; j < n_lm; ++j) {
    gt.landmark_time_sigmas[j] =
        std::sqrt(gt.landmark_time_sigmas[j] / static_cast<double>(n_series - 1));
  }

  gt.theoretical_mean =
      render_shape(spec, gt.landmark_mean_times, gt.landmark_mean_amplitudes);
  add_noise(gt.theoretical_mean, spec, noise_amp, rng);

  return data;
}

NoiseThresholds noise_thresholds(const ShapeSpec& spec, std::size_t n_rep,
                                 std::uint64_t seed) {
  if (auto r = validate_spec(spec); !r) throw std::invalid_argument(r.reason);
  if (n_rep < 1) throw std::invalid_argument("n_rep must be >= 1");

  std::vector<double> nominal_times, nominal_amps;
  for (const auto& lm : spec.landmarks) {
    nominal_times.push_back(lm.nominal_time);
    nominal_amps.push_back(lm.nominal_amplitude);
  }
  const TimeSeries base = render_shape(spec, nominal_times, nominal_amps);
  const double noise_amp = spec.noise_amplitude_ratio * shape_height(spec);

  std::mt19937_64 rng(seed);
  NoiseThresholds sums;
  for (std::size_t rep = 0; rep < n_rep; ++rep) {
    TimeSeries a = base;
    TimeSeries b = base;
    add_noise(a, spec, noise_amp, rng);
    add_noise(b, spec, noise_amp, rng);

    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double diff = a[i] - b[i];
      sq += diff * diff;
    }
    sums.euclidean += std::sqrt(sq);

    if (noise_amp > 0.0) {
      const auto profile = twp_basic(dtw_align(a, b).path);
      sums.phase += phase_distance(profile);
      sums.tam += tam_from_profile(profile).gamma;
    }
  }

  const double inv = 1.0 / static_cast<double>(n_rep);
  return {sums.euclidean * inv, sums.phase * inv, sums.tam * inv};
}

double noise_threshold(const ShapeSpec& spec, SeriesDistance kind, std::size_t n_rep,
                       std::uint64_t seed) {
  if (kind == SeriesDistance::dtw) {
    // Not part of the standard threshold triple; computed directly.
    if (auto r = validate_spec(spec); !r) throw std::invalid_argument(r.reason);
    std::vector<double> times, amps;
    for (const auto& lm : spec.landmarks) {
      times.push_back(lm.nominal_time);
      amps.push_back(lm.nominal_amplitude);
    }
    const TimeSeries base = render_shape(spec, times, amps);
    const double noise_amp = spec.noise_amplitude_ratio * shape_height(spec);
    std::mt19937_64 rng(seed);
    double sum = 0.0;
    for (std::size_t rep = 0; rep < n_rep; ++rep) {
      TimeSeries a = base;
      TimeSeries b = base;
      add_noise(a, spec, noise_amp, rng);
      add_noise(b, spec, noise_amp, rng);
      sum += dtw_distance(a, b);
    }
    return sum / static_cast<double>(n_rep);
  }

  const NoiseThresholds t = noise_thresholds(spec, n_rep, seed);
  switch (kind) {
    case SeriesDistance::euclidean:
      return t.euclidean;
    case SeriesDistance::phase:
      return t.phase;
    case SeriesDistance::tam:
      return t.tam;
    default:
      return 0.0;  // unreachable
  }
}

}  // namespace warpmean
