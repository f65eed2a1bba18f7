#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

using namespace warpmean;
using namespace warpmean::cli;

std::optional<std::size_t> max_iters_from_env() {
  if (const char* env = std::getenv("TWP_MAX_ITERS")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::runtime_error("TWP_MAX_ITERS is not a positive integer: " +
                               std::string(env));
    }
  }
  return std::nullopt;
}

void print_average_summary(const RunReport& report) {
  for (const auto& c : report.classes) {
    std::cout << "class " << c.label << ": n=" << c.n_series << " mean_length="
              << c.mean_length << " iterations=" << c.iterations;
    if (c.efficiency) {
      std::cout << " f=" << c.efficiency->f
                << (c.efficiency->twp_wins ? " (beats DBA cost bound)"
                                           : " (above DBA cost bound)");
    }
    if (!c.converged) std::cout << " [iteration cap reached]";
    std::cout << "\n  wgss dtw=" << c.wgss_dtw << " phase=" << c.wgss_phase
              << " tam=" << c.wgss_tam << "  (" << c.seconds << " s)\n";
  }
  std::cout << "report.json written (" << report.seconds << " s total)\n";
}

void print_compare_summary(const CompareReport& report) {
  for (const auto& c : report.classes) {
    std::cout << "class " << c.label << ": n=" << c.n_series
              << " twp_iterations=" << c.twp_iterations
              << " geomean ratio dtw=" << c.geomean[WgssMetric::dtw]
              << " phase=" << c.geomean[WgssMetric::phase]
              << " tam=" << c.geomean[WgssMetric::tam] << "  (" << c.seconds << " s)\n";
  }
  std::cout << "overall geomean ratio dtw=" << report.overall_geomean[WgssMetric::dtw]
            << " phase=" << report.overall_geomean[WgssMetric::phase]
            << " tam=" << report.overall_geomean[WgssMetric::tam] << "\n"
            << "compare.csv and compare.json written (" << report.seconds << " s total)\n";
}

void print_synth_summary(const SynthReport& report, const SynthOptions& opts) {
  std::cout << "generated " << opts.n_series << " series of length "
            << report.spec.total_length << " (seed " << opts.seed << ")\n"
            << "noise thresholds: euclidean=" << report.thresholds.euclidean
            << " phase=" << report.thresholds.phase << " tam=" << report.thresholds.tam
            << "\nfiles: " << report.dataset_file << ", " << report.mean_file << ", "
            << report.ground_truth_file << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shape- and phase-aware time series averaging"};
  app.require_subcommand(1);

  // average
  AverageOptions avg;
  std::string avg_method = "twp";
  std::string avg_norm = "none";
  int avg_band = -1;
  auto* cmd_avg = app.add_subcommand("average", "Average each class of a dataset");
  cmd_avg->add_option("input", avg.input, "Dataset file (label-first rows)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_avg->add_option("--method", avg_method, "twp | dba | psa | arithmetic")
      ->capture_default_str();
  cmd_avg->add_option("--norm", avg_norm, "none | z | unit")->capture_default_str();
  cmd_avg->add_option("--thr-ratio", avg.thr_ratio, "Termination threshold as a fraction of MSS")
      ->capture_default_str();
  cmd_avg->add_option("--dba-iters", avg.dba_iters, "DBA refinement passes")
      ->capture_default_str();
  cmd_avg->add_option("--seed", avg.seed, "Seed for DBA initialization")
      ->capture_default_str();
  cmd_avg->add_option("--band", avg_band, "Sakoe-Chiba band width (off when omitted)");
  cmd_avg->add_option("--out", avg.out_dir, "Output directory")->required();
  cmd_avg->add_flag("--no-labels", "Input rows carry no leading class label");

  // compare
  CompareOptions cmp;
  std::string cmp_norm = "z";
  auto* cmd_cmp = app.add_subcommand(
      "compare", "WGSS ratios of the profile-based mean against seeded DBA runs");
  cmd_cmp->add_option("input", cmp.input, "Dataset file (label-first rows)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_cmp->add_option("--seeds", cmp.seeds, "DBA seeds (default 1..12)");
  cmd_cmp->add_option("--thr-ratio", cmp.thr_ratio, "Termination threshold as a fraction of MSS")
      ->capture_default_str();
  cmd_cmp->add_option("--dba-iters", cmp.dba_iters, "DBA refinement passes")
      ->capture_default_str();
  cmd_cmp->add_option("--norm", cmp_norm, "none | z | unit")->capture_default_str();
  cmd_cmp->add_option("--out", cmp.out_dir, "Output directory")->required();
  cmd_cmp->add_flag("--no-labels", "Input rows carry no leading class label");

  // synth
  SynthOptions syn;
  std::string syn_spec;
  auto* cmd_syn = app.add_subcommand("synth", "Generate a synthetic dataset with ground truth");
  cmd_syn->add_option("--spec", syn_spec, "Shape spec JSON (built-in default when omitted)")
      ->check(CLI::ExistingFile);
  cmd_syn->add_option("-n,--n-series", syn.n_series, "Number of series")
      ->capture_default_str();
  cmd_syn->add_option("--seed", syn.seed, "Generator seed")->capture_default_str();
  cmd_syn->add_option("--threshold-reps", syn.threshold_reps,
                      "Noise-threshold repetitions")
      ->capture_default_str();
  cmd_syn->add_option("--out", syn.out_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_avg->parsed()) {
      avg.method = parse_method(avg_method);
      avg.norm = parse_normalization(avg_norm);
      if (avg_band >= 0) avg.band = avg_band;
      avg.label_first = cmd_avg->count("--no-labels") == 0;
      avg.max_iters = max_iters_from_env();
      print_average_summary(run_average(avg));
    } else if (cmd_cmp->parsed()) {
      cmp.norm = parse_normalization(cmp_norm);
      cmp.label_first = cmd_cmp->count("--no-labels") == 0;
      cmp.max_iters = max_iters_from_env();
      print_compare_summary(run_compare(cmp));
    } else if (cmd_syn->parsed()) {
      if (!syn_spec.empty()) syn.spec_file = syn_spec;
      print_synth_summary(run_synth(syn), syn);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
