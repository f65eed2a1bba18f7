#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "warpmean/series.hpp"

namespace warpmean {

/// Distance used inside a within-group-sum-of-squares evaluation.
enum class WgssMetric { dtw, phase, tam };

/// One DBA refinement pass: aligns every series to the current mean,
/// groups the associated amplitudes per mean sample and replaces each mean
/// value with its group average.
TimeSeries dba_step(const TimeSeries& mean, const Dataset& d,
                    std::optional<int> band = std::nullopt);

/// DTW barycenter averaging initialized from a seeded random member of the
/// dataset, refined for `iterations` passes. Deterministic given the seed.
TimeSeries dba_average(const Dataset& d, std::size_t iterations, std::uint64_t seed,
                       std::optional<int> band = std::nullopt);

/// Pairwise average along the warping path itself (one value per path
/// association), uniformly rescaled to length ceil((L1+L2)/2) by linear
/// interpolation. The rescale distorts timing unevenly -- the artifact the
/// in-phase average avoids -- and is kept as a reference baseline.
TimeSeries psa_pairwise_mean(const TimeSeries& s1, const TimeSeries& s2);

/// Unweighted agglomerative averaging: repeatedly merges the closest pair
/// under dtw_distance with psa_pairwise_mean until one series remains.
TimeSeries psa_average(const Dataset& d);

/// Sum over the dataset of squared distances to the mean under the chosen
/// metric.
double wgss(const Dataset& d, const TimeSeries& mean, WgssMetric metric,
            std::optional<int> band = std::nullopt);

}  // namespace warpmean
