#pragma once

#include <optional>
#include <vector>

#include "warpmean/series.hpp"

namespace warpmean {

/// Pointwise distance matrix between two series. Rows index the first
/// series (t1), columns the second (t2).
struct SimilarityMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> cells;  // row-major, rows*cols entries

  double at(int i, int j) const { return cells[static_cast<std::size_t>(i) * cols + j]; }
  double& at(int i, int j) { return cells[static_cast<std::size_t>(i) * cols + j]; }
};

/// Set of allowed per-step index increments (dt1, dt2), each with
/// dt1,dt2 >= 0 and dt1+dt2 >= 1. The list order doubles as the
/// backtracking preference for tie-breaks.
struct StepPattern {
  struct Step {
    int dt1 = 0;
    int dt2 = 0;

    bool operator==(const Step&) const = default;
  };

  std::vector<Step> steps;

  /// Single forward steps, preferring diagonal, then vertical (0,1), then
  /// horizontal (1,0). This is the pattern used everywhere unless a caller
  /// supplies another.
  static const StepPattern& basic();

  bool is_basic() const;
};

struct AlignmentResult {
  WarpingPath path;
  double cost = 0.0;  // sum of matrix cells along the path
};

/// M(i,j) = |s1(i) - s2(j)|, the one-dimensional Euclidean point distance.
SimilarityMatrix build_similarity_matrix(const TimeSeries& s1, const TimeSeries& s2);

/// Optimal warping path by dynamic programming. The cost is the global
/// minimum of the accumulated point distances over all admissible paths.
/// Ties in backtracking resolve in the pattern's step order, so the result
/// is deterministic. An optional Sakoe-Chiba band restricts cells to
/// |t1 - t2| <= band; if no admissible path remains, throws
/// std::invalid_argument.
AlignmentResult dtw_align(const TimeSeries& s1, const TimeSeries& s2,
                          const StepPattern& pattern = StepPattern::basic(),
                          std::optional<int> band = std::nullopt);

/// Cost of the optimal unconstrained alignment under the basic pattern.
/// Computed with a rolling-row recurrence; equals dtw_align(...).cost
/// bit for bit.
double dtw_distance(const TimeSeries& s1, const TimeSeries& s2);

/// Exhaustive-enumeration alignment for tiny inputs (len1+len2 <= 14),
/// with the same tie-break as dtw_align. Used as an independent oracle.
AlignmentResult brute_force_dtw(const TimeSeries& s1, const TimeSeries& s2);

}  // namespace warpmean
