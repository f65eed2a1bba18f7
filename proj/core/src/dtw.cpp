#include "warpmean/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace warpmean {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_valid(const TimeSeries& s, const char* which) {
  if (auto r = validate_series(s); !r) {
    throw std::invalid_argument(std::string(which) + ": " + r.reason);
  }
}

void require_valid_pattern(const StepPattern& pattern) {
  if (pattern.steps.empty()) throw std::invalid_argument("step pattern is empty");
  for (const auto& st : pattern.steps) {
    if (st.dt1 < 0 || st.dt2 < 0 || st.dt1 + st.dt2 < 1) {
      throw std::invalid_argument("step pattern contains illegal step (" +
                                  std::to_string(st.dt1) + "," + std::to_string(st.dt2) + ")");
    }
  }
}

inline bool in_band(int i, int j, const std::optional<int>& band) {
  return !band || std::abs(i - j) <= *band;
}

}  // namespace

const StepPattern& StepPattern::basic() {
  static const StepPattern p{{{1, 1}, {0, 1}, {1, 0}}};
  return p;
}

bool StepPattern::is_basic() const { return steps == basic().steps; }

SimilarityMatrix build_similarity_matrix(const TimeSeries& s1, const TimeSeries& s2) {
  require_valid(s1, "s1");
  require_valid(s2, "s2");
  SimilarityMatrix m;
  m.rows = static_cast<int>(s1.size());
  m.cols = static_cast<int>(s2.size());
  m.cells.resize(static_cast<std::size_t>(m.rows) * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = std::abs(s1[i] - s2[j]);
  }
  return m;
}

AlignmentResult dtw_align(const TimeSeries& s1, const TimeSeries& s2,
                          const StepPattern& pattern, std::optional<int> band) {
  require_valid(s1, "s1");
  require_valid(s2, "s2");
  require_valid_pattern(pattern);
  if (band && *band < 0) throw std::invalid_argument("band width must be >= 0");

  const int n = static_cast<int>(s1.size());
  const int m = static_cast<int>(s2.size());
  std::vector<double> acc(static_cast<std::size_t>(n) * m, kInf);
  auto at = [&](int i, int j) -> double& { return acc[static_cast<std::size_t>(i) * m + j]; };

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!in_band(i, j, band)) continue;
      double best = kInf;
      if (i == 0 && j == 0) {
        best = 0.0;
      } else {
        for (const auto& st : pattern.steps) {
          const int pi = i - st.dt1, pj = j - st.dt2;
          if (pi < 0 || pj < 0) continue;
          best = std::min(best, at(pi, pj));
        }
      }
      if (best < kInf) at(i, j) = std::abs(s1[i] - s2[j]) + best;
    }
  }

  if (!(at(n - 1, m - 1) < kInf)) {
    throw std::invalid_argument("no admissible warping path (band too narrow for lengths " +
                                std::to_string(n) + " and " + std::to_string(m) + ")");
  }

  // Backtrack; among predecessors with the minimal accumulated cost, the
  // first step in the pattern's list wins.
  WarpingPath path;
  int i = n - 1, j = m - 1;
  path.pairs.push_back({i, j});
  while (i != 0 || j != 0) {
    double best = kInf;
    int bi = -1, bj = -1;
    for (const auto& st : pattern.steps) {
      const int pi = i - st.dt1, pj = j - st.dt2;
      if (pi < 0 || pj < 0 || !in_band(pi, pj, band)) continue;
      const double c = at(pi, pj);
      if (c < best) {
        best = c;
        bi = pi;
        bj = pj;
      }
    }
    i = bi;
    j = bj;
    path.pairs.push_back({i, j});
  }
  std::reverse(path.pairs.begin(), path.pairs.end());

  return {std::move(path), at(n - 1, m - 1)};
}

double dtw_distance(const TimeSeries& s1, const TimeSeries& s2) {
  require_valid(s1, "s1");
  require_valid(s2, "s2");

  const std::size_t n = s1.size(), m = s2.size();
  std::vector<double> prev(m), curr(m);

  prev[0] = std::abs(s1[0] - s2[0]);
  for (std::size_t j = 1; j < m; ++j) prev[j] = std::abs(s1[0] - s2[j]) + prev[j - 1];

  for (std::size_t i = 1; i < n; ++i) {
    curr[0] = std::abs(s1[i] - s2[0]) + prev[0];
    for (std::size_t j = 1; j < m; ++j) {
      curr[j] = std::abs(s1[i] - s2[j]) + std::min({prev[j - 1], prev[j], curr[j - 1]});
    }
    std::swap(prev, curr);
  }
  return prev[m - 1];
}

AlignmentResult brute_force_dtw(const TimeSeries& s1, const TimeSeries& s2) {
  require_valid(s1, "s1");
  require_valid(s2, "s2");
  const int n = static_cast<int>(s1.size());
  const int m = static_cast<int>(s2.size());
  if (n + m > 14) {
    throw std::invalid_argument("brute_force_dtw limited to len1+len2 <= 14, got " +
                                std::to_string(n + m));
  }

  // Depth-first enumeration of all paths, walked backward from the end in
  // the same predecessor order dtw_align uses for ties. The first minimal
  // path found is therefore exactly the one dtw_align backtracks.
  std::vector<PathPoint> stack;  // end -> start
  WarpingPath best_path;
  double best_cost = kInf;

  auto forward_cost = [&]() {
    // Sum in forward order so the accumulation matches dtw_align bit for bit.
    double c = 0.0;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      c += std::abs(s1[it->t1] - s2[it->t2]);
    }
    return c;
  };

  auto dfs = [&](auto&& self, int i, int j) -> void {
    stack.push_back({i, j});
    if (i == 0 && j == 0) {
      const double c = forward_cost();
      if (c < best_cost) {
        best_cost = c;
        best_path.pairs.assign(stack.rbegin(), stack.rend());
      }
    } else {
      if (i > 0 && j > 0) self(self, i - 1, j - 1);
      if (j > 0) self(self, i, j - 1);
      if (i > 0) self(self, i - 1, j);
    }
    stack.pop_back();
  };
  dfs(dfs, n - 1, m - 1);

  return {std::move(best_path), best_cost};
}

}  // namespace warpmean
