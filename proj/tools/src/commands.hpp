#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "warpmean/averaging.hpp"
#include "warpmean/baselines.hpp"
#include "warpmean/series.hpp"
#include "warpmean/synthgen.hpp"

namespace warpmean::cli {

enum class Method { twp, dba, psa, arithmetic };
enum class Normalization { none, z, unit };

Method parse_method(const std::string& name);
Normalization parse_normalization(const std::string& name);
std::string method_name(Method m);
std::string normalization_name(Normalization n);

/// Splits a dataset into per-label groups in order of first appearance.
/// An unlabeled dataset becomes a single group labeled "all".
std::vector<std::pair<std::string, Dataset>> group_by_label(const Dataset& d);

Dataset normalize_dataset(const Dataset& d, Normalization norm);

struct AverageOptions {
  std::filesystem::path input;
  std::filesystem::path out_dir;
  Method method = Method::twp;
  Normalization norm = Normalization::none;
  double thr_ratio = 0.0005;
  std::size_t dba_iters = 15;
  std::uint64_t seed = 1;
  std::optional<int> band;
  bool label_first = true;
  std::optional<std::size_t> max_iters;  // overrides the 50*N cap
};

struct ClassReport {
  std::string label;
  std::size_t n_series = 0;
  std::size_t mean_length = 0;
  std::size_t iterations = 0;
  bool converged = true;
  std::optional<EfficiencyVerdict> efficiency;  // profile averaging only
  double wgss_dtw = 0.0;
  double wgss_phase = 0.0;
  double wgss_tam = 0.0;
  double seconds = 0.0;
  std::string mean_file;
  std::string sigma_file;  // empty unless emitted
  std::string trace_file;  // empty unless emitted
};

struct RunReport {
  AverageOptions config;
  std::vector<ClassReport> classes;
  double seconds = 0.0;
};

/// Loads, groups by class, normalizes, averages with the chosen method and
/// writes mean/sigma/trace CSVs plus report.json into out_dir.
RunReport run_average(const AverageOptions& opts);

struct CompareOptions {
  std::filesystem::path input;
  std::filesystem::path out_dir;
  std::vector<std::uint64_t> seeds;  // empty -> 1..12
  double thr_ratio = 0.10;
  std::size_t dba_iters = 15;
  Normalization norm = Normalization::z;
  bool label_first = true;
  std::optional<std::size_t> max_iters;
};

/// Values keyed by WgssMetric, in enum order {dtw, phase, tam}.
struct MetricTriple {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  double& operator[](WgssMetric m) { return v[static_cast<std::size_t>(m)]; }
  double operator[](WgssMetric m) const { return v[static_cast<std::size_t>(m)]; }
};

struct CompareSeedRow {
  std::uint64_t seed = 0;
  MetricTriple wgss_dba;
  MetricTriple ratio;  // wgss_twp / wgss_dba; 1 when both sides are zero
  std::array<bool, 3> degenerate{false, false, false};
};

struct CompareClassReport {
  std::string label;
  std::size_t n_series = 0;
  std::size_t twp_iterations = 0;
  MetricTriple wgss_twp;
  std::vector<CompareSeedRow> rows;
  MetricTriple geomean;  // over this class's seed ratios
  double seconds = 0.0;
};

struct CompareReport {
  CompareOptions config;
  std::vector<CompareClassReport> classes;
  MetricTriple overall_geomean;  // over every (class, seed) ratio
  double seconds = 0.0;
};

/// One profile-based mean per class plus one DBA mean per (class, seed);
/// emits the WGSS ratio table as compare.csv and compare.json.
CompareReport run_compare(const CompareOptions& opts);

struct SynthOptions {
  std::optional<std::filesystem::path> spec_file;  // JSON; defaults when absent
  std::filesystem::path out_dir;
  std::size_t n_series = 50;
  std::uint64_t seed = 1;
  std::size_t threshold_reps = 500;
};

struct SynthReport {
  ShapeSpec spec;
  NoiseThresholds thresholds;
  std::vector<double> landmark_mean_times;
  std::vector<double> landmark_time_sigmas;
  std::string dataset_file;
  std::string mean_file;
  std::string ground_truth_file;
};

/// Generates the synthetic dataset and writes dataset.tsv,
/// theoretical_mean.csv and ground_truth.json (landmark statistics plus
/// the euclidean/phase/TAM noise thresholds).
SynthReport run_synth(const SynthOptions& opts);

ShapeSpec load_shape_spec(const std::filesystem::path& path);

}  // namespace warpmean::cli
