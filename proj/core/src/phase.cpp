#include "warpmean/phase.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace warpmean {

namespace {

// Lengths are implied by the endpoint constraint: the last pair is
// (len1-1, len2-1).
void derive_lengths(const WarpingPath& path, int& len1, int& len2) {
  if (path.pairs.empty()) throw std::invalid_argument("path is empty");
  len1 = path.pairs.back().t1 + 1;
  len2 = path.pairs.back().t2 + 1;
}

}  // namespace

PhaseProfile twp_basic(const WarpingPath& path) {
  int len1 = 0, len2 = 0;
  derive_lengths(path, len1, len2);
  if (auto r = validate_path(path, len1, len2); !r) {
    throw std::invalid_argument("invalid path: " + r.reason);
  }

  PhaseProfile out;
  out.len1 = len1;
  out.len2 = len2;
  out.phi.resize(static_cast<std::size_t>(len1 + len2 - 1));
  out.phi[0] = 0.0;

  std::size_t tau = 0;
  for (std::size_t i = 0; i + 1 < path.pairs.size(); ++i) {
    const int d1 = path.pairs[i + 1].t1 - path.pairs[i].t1;
    const int d2 = path.pairs[i + 1].t2 - path.pairs[i].t2;
    if (d1 == 1 && d2 == 1) {
      // In-phase move: advances tau twice without changing the lag.
      out.phi[tau + 1] = out.phi[tau];
      out.phi[tau + 2] = out.phi[tau];
      tau += 2;
    } else if (d1 == 1) {
      out.phi[tau + 1] = out.phi[tau] - 1.0;
      tau += 1;
    } else {
      out.phi[tau + 1] = out.phi[tau] + 1.0;
      tau += 1;
    }
  }
  return out;
}

PhaseProfile twp_general(const WarpingPath& path) {
  int len1 = 0, len2 = 0;
  derive_lengths(path, len1, len2);
  const auto& w = path.pairs;
  if (w.front() != PathPoint{0, 0}) throw std::invalid_argument("path must start at (0,0)");
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const int d1 = w[i + 1].t1 - w[i].t1;
    const int d2 = w[i + 1].t2 - w[i].t2;
    if (d1 < 0 || d2 < 0 || d1 + d2 < 1) {
      throw std::invalid_argument("step " + std::to_string(i) + " violates monotonicity");
    }
  }

  PhaseProfile out;
  out.len1 = len1;
  out.len2 = len2;
  out.phi.resize(static_cast<std::size_t>(len1 + len2 - 1));

  // Each pair maps to (tau, phi) = (t1+t2, t2-t1); tau is strictly
  // increasing, so phi is a function of tau and can be interpolated at the
  // integer tau values the path skips.
  std::size_t seg = 0;
  for (int tau = 0; tau < len1 + len2 - 1; ++tau) {
    while (seg + 1 < w.size() && w[seg + 1].t1 + w[seg + 1].t2 <= tau) ++seg;
    const int tau0 = w[seg].t1 + w[seg].t2;
    const double phi0 = static_cast<double>(w[seg].t2 - w[seg].t1);
    if (tau == tau0 || seg + 1 == w.size()) {
      out.phi[tau] = phi0;
    } else {
      const int tau1 = w[seg + 1].t1 + w[seg + 1].t2;
      const double phi1 = static_cast<double>(w[seg + 1].t2 - w[seg + 1].t1);
      out.phi[tau] = phi0 + (phi1 - phi0) * static_cast<double>(tau - tau0) /
                                static_cast<double>(tau1 - tau0);
    }
  }
  return out;
}

double phase_distance(const PhaseProfile& profile) {
  double sum = 0.0;
  for (double v : profile.phi) sum += v * v;
  return std::sqrt(sum);
}

double phase_distance(const TimeSeries& s1, const TimeSeries& s2) {
  return phase_distance(twp_basic(dtw_align(s1, s2).path));
}

TamBreakdown tam_from_profile(const PhaseProfile& profile) {
  const int big = std::max(profile.len1, profile.len2) - 1;
  const int small = std::min(profile.len1, profile.len2) - 1;
  if (small == 0) {
    throw std::invalid_argument("TAM undefined for a length-1 series");
  }

  double sum_dphi = 0.0;
  for (std::size_t t = 0; t + 1 < profile.phi.size(); ++t) {
    sum_dphi += std::abs(profile.phi[t + 1] - profile.phi[t]);
  }
  const double phi_final = std::abs(profile.phi.back());

  const double L = static_cast<double>(big);
  const double l = static_cast<double>(small);
  TamBreakdown tam;
  tam.gamma_min = phi_final / L;
  // sum_dphi >= |phi_final| always (phi starts at 0); clamp rounding dust.
  tam.gamma_w = (2.0 * L + l) / (2.0 * L * l) * std::max(0.0, sum_dphi - phi_final);
  tam.gamma = tam.gamma_min + tam.gamma_w;
  return tam;
}

double tam_from_path(const WarpingPath& path) {
  int len1 = 0, len2 = 0;
  derive_lengths(path, len1, len2);
  if (auto r = validate_path(path, len1, len2); !r) {
    throw std::invalid_argument("invalid path: " + r.reason);
  }
  if (std::min(len1, len2) < 2) {
    throw std::invalid_argument("TAM undefined for a length-1 series");
  }

  int vertical = 0, horizontal = 0, diagonal = 0;
  for (std::size_t i = 0; i + 1 < path.pairs.size(); ++i) {
    const int d1 = path.pairs[i + 1].t1 - path.pairs[i].t1;
    const int d2 = path.pairs[i + 1].t2 - path.pairs[i].t2;
    if (d1 == 1 && d2 == 1) {
      ++diagonal;
    } else if (d1 == 1) {
      ++horizontal;
    } else {
      ++vertical;
    }
  }

  // Each segment count normalized by its own maximal extent.
  const double adv = static_cast<double>(vertical) / (len2 - 1);
  const double del = static_cast<double>(horizontal) / (len1 - 1);
  const double in_phase = static_cast<double>(diagonal) / (std::min(len1, len2) - 1);
  return adv + del + (1.0 - in_phase);
}

}  // namespace warpmean
