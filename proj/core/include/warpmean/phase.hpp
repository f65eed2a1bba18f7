#pragma once

#include "warpmean/dtw.hpp"
#include "warpmean/series.hpp"

namespace warpmean {

/// A warping path re-expressed on the in-phase time scale. For series of
/// lengths len1 (n) and len2 (m), phi has exactly n+m-1 entries indexed by
/// tau = t1+t2, and phi[tau] is the local lag t2-t1 (positive when the
/// first series lags the second). phi[0] = 0 and phi[n+m-2] = (m-1)-(n-1).
///
/// Values are stored as doubles: profiles derived from single-step paths
/// are integer-valued, while interpolated profiles from multi-step paths
/// take any real value with |phi[tau+1]-phi[tau]| <= 1.
struct PhaseProfile {
  std::vector<double> phi;
  int len1 = 0;
  int len2 = 0;

  std::size_t size() const { return phi.size(); }
};

/// Time alignment measure split into the unavoidable stretch from unequal
/// lengths (gamma_min) and the local-warp remainder (gamma_w).
struct TamBreakdown {
  double gamma = 0.0;      // total, in [0, 3]
  double gamma_min = 0.0;  // |phi_final| / (max length - 1)
  double gamma_w = 0.0;    // gamma - gamma_min, >= 0
};

/// Profile of a single-forward-step path via the step rewrite
/// (1,1) -> two in-phase steps, (1,0) -> lag -1, (0,1) -> lag +1.
/// Throws std::invalid_argument on a non-basic path.
PhaseProfile twp_basic(const WarpingPath& path);

/// Profile of any monotone path: converts each pair to (tau, phi) =
/// (t1+t2, t2-t1) and linearly interpolates phi over all integer tau.
/// Identical to twp_basic on single-step paths.
PhaseProfile twp_general(const WarpingPath& path);

/// Root-sum-square of a lag profile.
double phase_distance(const PhaseProfile& profile);

/// Phase distance between two series: the root-sum-square lag of their
/// optimal basic-pattern alignment. Symmetric, zero for identical inputs,
/// but not a metric.
double phase_distance(const TimeSeries& s1, const TimeSeries& s2);

/// TAM from a lag profile; handles any step pattern and unequal lengths.
/// With L = max(len)-1 and l = min(len)-1:
///   gamma = (1/(2*L*l)) * ((2L+l)*sum|delta phi| - (2L-l)*|phi_final|)
/// Throws std::invalid_argument when l == 0.
TamBreakdown tam_from_profile(const PhaseProfile& profile);

/// TAM from the vertical/horizontal/diagonal segment counts of a basic
/// path, normalized by len2-1, len1-1 and min(len)-1 respectively. Agrees
/// with tam_from_profile(twp_basic(path)).gamma; kept as an independent
/// route for cross-checking.
double tam_from_path(const WarpingPath& path);

}  // namespace warpmean
