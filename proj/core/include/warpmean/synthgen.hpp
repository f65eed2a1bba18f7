#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "warpmean/series.hpp"

namespace warpmean {

/// One distinguished shape feature: a vertex of the piecewise-linear base
/// shape. The temporal location is always randomized (Gaussian, clipped to
/// preserve ordering); the amplitude only when amplitude_randomized is set
/// (uniform in [amplitude_lo, amplitude_hi]).
struct Landmark {
  double nominal_time = 0.0;       // sample index
  double nominal_amplitude = 0.0;  // arbitrary units
  double time_sigma = 0.0;         // samples
  bool amplitude_randomized = false;
  double amplitude_lo = 0.0;
  double amplitude_hi = 0.0;
};

enum class NoiseKind { uniform, gaussian };

/// Recipe for a family of synthetic sequences: six landmarks (exactly
/// three of them amplitude-randomized) on a flat baseline, rendered
/// piecewise-linearly and topped with white noise scaled to the base
/// shape's maximum height.
struct ShapeSpec {
  std::vector<Landmark> landmarks;
  int total_length = 500;
  double noise_amplitude_ratio = 0.10;
  NoiseKind noise = NoiseKind::uniform;
  double lead_in_time = 15.0;  // flat baseline vertex before the first landmark

  /// Two tall early peaks followed by alternating valleys and peaks, all
  /// sharp extrema so their temporal location is well defined.
  static ShapeSpec defaults();
};

/// Per-series randomization record: the drawn (integer) landmark times and
/// amplitudes actually rendered.
struct SeriesDraw {
  std::vector<int> times;
  std::vector<double> amplitudes;
};

struct SyntheticGroundTruth {
  /// The base shape rendered at the sample-mean landmark times and
  /// amplitudes, with one instance of the same noise level added.
  TimeSeries theoretical_mean;
  std::vector<double> landmark_mean_times;       // sample means of the draws
  std::vector<double> landmark_time_sigmas;      // sample std dev (n-1) of the draws
  std::vector<double> landmark_mean_amplitudes;  // sample means of the draws
};

struct SyntheticData {
  Dataset dataset;
  SyntheticGroundTruth ground_truth;
  std::vector<SeriesDraw> draws;  // one record per generated series
};

/// Distance measure for noise-floor estimation.
enum class SeriesDistance { euclidean, dtw, phase, tam };

struct NoiseThresholds {
  double euclidean = 0.0;
  double phase = 0.0;
  double tam = 0.0;
};

ValidationResult validate_spec(const ShapeSpec& spec);

/// Renders the base shape through the given landmark vertices (plus the
/// baseline anchors at 0, lead_in_time and total_length-1), sampling at
/// integer indices. Integer vertex times reproduce their amplitude
/// exactly.
TimeSeries render_shape(const ShapeSpec& spec, const std::vector<double>& times,
                        const std::vector<double>& amplitudes);

/// Generates n_series randomized instances of the shape plus the matching
/// ground truth. Deterministic per seed.
SyntheticData generate_dataset(const ShapeSpec& spec, std::size_t n_series,
                               std::uint64_t seed);

/// Expected distance between two renderings of the same shape that differ
/// only in their noise instance, averaged over n_rep independent pairs.
/// Distances at or below this level are indistinguishable from noise.
double noise_threshold(const ShapeSpec& spec, SeriesDistance kind, std::size_t n_rep,
                       std::uint64_t seed);

/// Euclidean, phase and TAM thresholds from one pass over the same draws
/// noise_threshold would use.
NoiseThresholds noise_thresholds(const ShapeSpec& spec, std::size_t n_rep,
                                 std::uint64_t seed);

}  // namespace warpmean
