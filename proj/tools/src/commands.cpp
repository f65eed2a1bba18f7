#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"

#include "io.hpp"
#include "warpmean/dtw.hpp"
#include "warpmean/phase.hpp"

namespace warpmean::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sanitize_label(const std::string& label) {
  std::string out;
  for (char c : label) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  }
  return out.empty() ? "unlabeled" : out;
}

json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

constexpr std::array<WgssMetric, 3> kMetrics{WgssMetric::dtw, WgssMetric::phase,
                                             WgssMetric::tam};
constexpr std::array<const char*, 3> kMetricNames{"dtw", "phase", "tam"};

void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<TraceEntry>& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(std::numeric_limits<double>::max_digits10);
  out << "iteration,max_ratio,pair_p,pair_q\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << (i + 1) << ',' << trace[i].max_ratio << ',' << trace[i].p << ',' << trace[i].q
        << '\n';
  }
}

void write_values_csv_row(std::ofstream& out, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  out << '\n';
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "twp") return Method::twp;
  if (name == "dba") return Method::dba;
  if (name == "psa") return Method::psa;
  if (name == "arithmetic") return Method::arithmetic;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected twp, dba, psa or arithmetic)");
}

Normalization parse_normalization(const std::string& name) {
  if (name == "none") return Normalization::none;
  if (name == "z") return Normalization::z;
  if (name == "unit") return Normalization::unit;
  throw std::invalid_argument("unknown normalization '" + name +
                              "' (expected none, z or unit)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::twp: return "twp";
    case Method::dba: return "dba";
    case Method::psa: return "psa";
    case Method::arithmetic: return "arithmetic";
  }
  return "?";
}

std::string normalization_name(Normalization n) {
  switch (n) {
    case Normalization::none: return "none";
    case Normalization::z: return "z";
    case Normalization::unit: return "unit";
  }
  return "?";
}

std::vector<std::pair<std::string, Dataset>> group_by_label(const Dataset& d) {
  std::vector<std::pair<std::string, Dataset>> groups;
  if (d.labels.empty()) {
    groups.emplace_back("all", d);
    return groups;
  }
  for (std::size_t i = 0; i < d.series.size(); ++i) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == d.labels[i]; });
    if (it == groups.end()) {
      groups.emplace_back(d.labels[i], Dataset{});
      it = std::prev(groups.end());
    }
    it->second.series.push_back(d.series[i]);
    it->second.labels.push_back(d.labels[i]);
  }
  return groups;
}

Dataset normalize_dataset(const Dataset& d, Normalization norm) {
  if (norm == Normalization::none) return d;
  Dataset out;
  out.labels = d.labels;
  out.series.reserve(d.series.size());
  for (const auto& s : d.series) {
    out.series.push_back(norm == Normalization::z ? znormalize(s) : rescale_unit(s));
  }
  return out;
}

namespace {

// Pointwise mean across a group; with unequal lengths each sample averages
// the series that reach it.
TimeSeries arithmetic_mean(const Dataset& d) {
  std::size_t longest = 0;
  for (const auto& s : d.series) longest = std::max(longest, s.size());
  TimeSeries out;
  out.values.resize(longest, 0.0);
  std::vector<std::size_t> count(longest, 0);
  for (const auto& s : d.series) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      out[i] += s[i];
      ++count[i];
    }
  }
  for (std::size_t i = 0; i < longest; ++i) out[i] /= static_cast<double>(count[i]);
  return out;
}

json config_json(const AverageOptions& o) {
  return json{{"input", o.input.string()},
              {"out_dir", o.out_dir.string()},
              {"method", method_name(o.method)},
              {"normalization", normalization_name(o.norm)},
              {"thr_ratio", o.thr_ratio},
              {"dba_iters", o.dba_iters},
              {"seed", o.seed},
              {"band", o.band ? json(*o.band) : json(nullptr)},
              {"label_first", o.label_first},
              {"max_iterations", o.max_iters ? json(*o.max_iters) : json(nullptr)}};
}

}  // namespace

RunReport run_average(const AverageOptions& opts) {
  const auto t_start = Clock::now();
  std::filesystem::create_directories(opts.out_dir);

  const Dataset raw = load_ucr(opts.input, opts.label_first);
  RunReport report;
  report.config = opts;

  for (auto& [label, group_raw] : group_by_label(raw)) {
    const auto t_class = Clock::now();
    const Dataset group = normalize_dataset(group_raw, opts.norm);
    const std::size_t n = group.size();

    ClassReport cr;
    cr.label = label;
    cr.n_series = n;

    TimeSeries mean;
    std::vector<double> sigma;
    std::vector<TraceEntry> trace;

    switch (opts.method) {
      case Method::twp: {
        AveragingConfig cfg;
        cfg.threshold_ratio = opts.thr_ratio;
        cfg.max_iterations = opts.max_iters.value_or(0);
        cfg.band = opts.band;
        AveragingResult res = twp_average(group, cfg);
        mean = std::move(res.mean);
        sigma = std::move(res.sigma);
        trace = std::move(res.trace);
        cr.iterations = res.iterations;
        cr.converged = res.converged;
        cr.efficiency = efficiency_ratio(res.iterations, n, mean.size(), opts.dba_iters);
        break;
      }
      case Method::dba:
        mean = dba_average(group, opts.dba_iters, opts.seed, opts.band);
        cr.iterations = opts.dba_iters;
        break;
      case Method::psa:
        mean = n == 1 ? group.series[0] : psa_average(group);
        cr.iterations = n - 1;
        break;
      case Method::arithmetic:
        mean = arithmetic_mean(group);
        break;
    }

    cr.mean_length = mean.size();
    cr.wgss_dtw = wgss(group, mean, WgssMetric::dtw, opts.band);
    cr.wgss_phase = wgss(group, mean, WgssMetric::phase, opts.band);
    cr.wgss_tam = wgss(group, mean, WgssMetric::tam, opts.band);

    const std::string tag = sanitize_label(label);
    const std::vector<std::string> meta{
        "warpmean mean series", "method: " + method_name(opts.method), "label: " + label,
        "length: " + std::to_string(mean.size())};
    cr.mean_file = "mean_" + tag + ".csv";
    save_series_csv(opts.out_dir / cr.mean_file, mean, meta);

    if (opts.method == Method::twp) {
      cr.sigma_file = "sigma_" + tag + ".csv";
      save_series_csv(opts.out_dir / cr.sigma_file, TimeSeries{sigma},
                      {"warpmean per-sample phase standard deviation", "label: " + label});
      cr.trace_file = "trace_" + tag + ".csv";
      write_trace_csv(opts.out_dir / cr.trace_file, trace);
    }

    cr.seconds = elapsed_seconds(t_class);
    report.classes.push_back(std::move(cr));
  }

  report.seconds = elapsed_seconds(t_start);

  json j;
  j["command"] = "average";
  j["config"] = config_json(opts);
  j["classes"] = json::array();
  for (const auto& c : report.classes) {
    json jc{{"label", c.label},
            {"n_series", c.n_series},
            {"mean_length", c.mean_length},
            {"iterations", c.iterations},
            {"converged", c.converged},
            {"wgss", {{"dtw", c.wgss_dtw}, {"phase", c.wgss_phase}, {"tam", c.wgss_tam}}},
            {"files",
             {{"mean", c.mean_file},
              {"sigma", c.sigma_file.empty() ? json(nullptr) : json(c.sigma_file)},
              {"trace", c.trace_file.empty() ? json(nullptr) : json(c.trace_file)}}},
            {"seconds", c.seconds}};
    if (c.efficiency) {
      jc["f_ratio"] = c.efficiency->f;
      jc["efficiency_threshold"] = c.efficiency->threshold;
      jc["twp_more_efficient"] = c.efficiency->twp_wins;
    } else {
      jc["f_ratio"] = nullptr;
      jc["efficiency_threshold"] = nullptr;
      jc["twp_more_efficient"] = nullptr;
    }
    j["classes"].push_back(std::move(jc));
  }
  j["seconds"] = report.seconds;

  std::ofstream out(opts.out_dir / "report.json");
  if (!out) throw std::runtime_error("cannot write report.json");
  out << j.dump(2) << '\n';

  return report;
}

CompareReport run_compare(const CompareOptions& opts) {
  const auto t_start = Clock::now();
  std::filesystem::create_directories(opts.out_dir);

  CompareOptions effective = opts;
  if (effective.seeds.empty()) {
    for (std::uint64_t s = 1; s <= 12; ++s) effective.seeds.push_back(s);
  }

  const Dataset raw = load_ucr(effective.input, effective.label_first);
  CompareReport report;
  report.config = effective;

  std::ofstream csv(effective.out_dir / "compare.csv");
  if (!csv) throw std::runtime_error("cannot write compare.csv");
  csv.precision(std::numeric_limits<double>::max_digits10);
  csv << "label,seed,metric,wgss_twp,wgss_dba,ratio,degenerate\n";

  std::array<double, 3> log_sum{0.0, 0.0, 0.0};
  std::size_t cell_count = 0;

  for (auto& [label, group_raw] : group_by_label(raw)) {
    const auto t_class = Clock::now();
    const Dataset group = normalize_dataset(group_raw, effective.norm);

    CompareClassReport cc;
    cc.label = label;
    cc.n_series = group.size();

    AveragingConfig cfg;
    cfg.threshold_ratio = effective.thr_ratio;
    cfg.max_iterations = effective.max_iters.value_or(0);
    const AveragingResult twp_res = twp_average(group, cfg);
    cc.twp_iterations = twp_res.iterations;
    for (auto m : kMetrics) cc.wgss_twp[m] = wgss(group, twp_res.mean, m);

    std::array<double, 3> class_log_sum{0.0, 0.0, 0.0};
    for (std::uint64_t seed : effective.seeds) {
      const TimeSeries dba_mean = dba_average(group, effective.dba_iters, seed);
      CompareSeedRow row;
      row.seed = seed;
      for (auto m : kMetrics) {
        const auto mi = static_cast<std::size_t>(m);
        row.wgss_dba[m] = wgss(group, dba_mean, m);
        if (cc.wgss_twp[m] == 0.0 && row.wgss_dba[m] == 0.0) {
          row.ratio[m] = 1.0;  // both means are exact: call it a tie
          row.degenerate[mi] = true;
        } else if (row.wgss_dba[m] == 0.0) {
          row.ratio[m] = std::numeric_limits<double>::infinity();
          row.degenerate[mi] = true;
        } else {
          row.ratio[m] = cc.wgss_twp[m] / row.wgss_dba[m];
        }
        class_log_sum[mi] += std::log(row.ratio[m]);
        csv << label << ',' << seed << ',' << kMetricNames[mi] << ',' << cc.wgss_twp[m]
            << ',' << row.wgss_dba[m] << ',' << row.ratio[m] << ','
            << (row.degenerate[mi] ? 1 : 0) << '\n';
      }
      cc.rows.push_back(std::move(row));
    }

    for (auto m : kMetrics) {
      const auto mi = static_cast<std::size_t>(m);
      cc.geomean[m] = std::exp(class_log_sum[mi] / static_cast<double>(cc.rows.size()));
      log_sum[mi] += class_log_sum[mi];
    }
    cell_count += cc.rows.size();
    cc.seconds = elapsed_seconds(t_class);
    report.classes.push_back(std::move(cc));
  }

  for (auto m : kMetrics) {
    const auto mi = static_cast<std::size_t>(m);
    report.overall_geomean[m] = std::exp(log_sum[mi] / static_cast<double>(cell_count));
  }
  report.seconds = elapsed_seconds(t_start);

  json j;
  j["command"] = "compare";
  j["config"] = {{"input", effective.input.string()},
                 {"out_dir", effective.out_dir.string()},
                 {"seeds", effective.seeds},
                 {"thr_ratio", effective.thr_ratio},
                 {"dba_iters", effective.dba_iters},
                 {"normalization", normalization_name(effective.norm)},
                 {"label_first", effective.label_first}};
  j["classes"] = json::array();
  for (const auto& c : report.classes) {
    json jc{{"label", c.label},
            {"n_series", c.n_series},
            {"twp_iterations", c.twp_iterations},
            {"seconds", c.seconds}};
    for (auto m : kMetrics) {
      const auto mi = static_cast<std::size_t>(m);
      jc["wgss_twp"][kMetricNames[mi]] = c.wgss_twp[m];
      jc["geomean_ratio"][kMetricNames[mi]] = finite_or_null(c.geomean[m]);
    }
    jc["cells"] = json::array();
    for (const auto& row : c.rows) {
      json jr{{"seed", row.seed}};
      for (auto m : kMetrics) {
        const auto mi = static_cast<std::size_t>(m);
        jr["wgss_dba"][kMetricNames[mi]] = row.wgss_dba[m];
        jr["ratio"][kMetricNames[mi]] = finite_or_null(row.ratio[m]);
        jr["degenerate"][kMetricNames[mi]] = row.degenerate[mi];
      }
      jc["cells"].push_back(std::move(jr));
    }
    j["classes"].push_back(std::move(jc));
  }
  for (auto m : kMetrics) {
    const auto mi = static_cast<std::size_t>(m);
    j["overall_geomean_ratio"][kMetricNames[mi]] = finite_or_null(report.overall_geomean[m]);
  }
  j["seconds"] = report.seconds;

  std::ofstream out(effective.out_dir / "compare.json");
  if (!out) throw std::runtime_error("cannot write compare.json");
  out << j.dump(2) << '\n';

  return report;
}

ShapeSpec load_shape_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  in >> j;

  ShapeSpec spec;
  spec.total_length = j.value("total_length", 500);
  spec.noise_amplitude_ratio = j.value("noise_amplitude_ratio", 0.10);
  spec.lead_in_time = j.value("lead_in_time", 15.0);
  const std::string noise = j.value("noise", "uniform");
  if (noise == "uniform") {
    spec.noise = NoiseKind::uniform;
  } else if (noise == "gaussian") {
    spec.noise = NoiseKind::gaussian;
  } else {
    throw std::runtime_error("unknown noise kind '" + noise + "'");
  }

  spec.landmarks.clear();
  for (const auto& jl : j.at("landmarks")) {
    Landmark lm;
    lm.nominal_time = jl.at("time").get<double>();
    lm.nominal_amplitude = jl.at("amplitude").get<double>();
    lm.time_sigma = jl.at("time_sigma").get<double>();
    lm.amplitude_randomized = jl.value("amplitude_randomized", false);
    if (lm.amplitude_randomized) {
      lm.amplitude_lo = jl.at("amplitude_lo").get<double>();
      lm.amplitude_hi = jl.at("amplitude_hi").get<double>();
    }
    spec.landmarks.push_back(lm);
  }
  if (auto r = validate_spec(spec); !r) {
    throw std::runtime_error(path.string() + ": " + r.reason);
  }
  return spec;
}

namespace {

json spec_json(const ShapeSpec& spec) {
  json j{{"total_length", spec.total_length},
         {"noise_amplitude_ratio", spec.noise_amplitude_ratio},
         {"noise", spec.noise == NoiseKind::uniform ? "uniform" : "gaussian"},
         {"lead_in_time", spec.lead_in_time},
         {"landmarks", json::array()}};
  for (const auto& lm : spec.landmarks) {
    json jl{{"time", lm.nominal_time},
            {"amplitude", lm.nominal_amplitude},
            {"time_sigma", lm.time_sigma},
            {"amplitude_randomized", lm.amplitude_randomized}};
    if (lm.amplitude_randomized) {
      jl["amplitude_lo"] = lm.amplitude_lo;
      jl["amplitude_hi"] = lm.amplitude_hi;
    }
    j["landmarks"].push_back(std::move(jl));
  }
  return j;
}

}  // namespace

SynthReport run_synth(const SynthOptions& opts) {
  std::filesystem::create_directories(opts.out_dir);

  SynthReport report;
  report.spec = opts.spec_file ? load_shape_spec(*opts.spec_file) : ShapeSpec::defaults();

  const SyntheticData data = generate_dataset(report.spec, opts.n_series, opts.seed);
  report.thresholds = noise_thresholds(report.spec, opts.threshold_reps, opts.seed);
  report.landmark_mean_times = data.ground_truth.landmark_mean_times;
  report.landmark_time_sigmas = data.ground_truth.landmark_time_sigmas;

  Dataset labeled = data.dataset;
  labeled.labels.assign(labeled.series.size(), "0");
  report.dataset_file = "dataset.tsv";
  save_ucr(opts.out_dir / report.dataset_file, labeled);

  report.mean_file = "theoretical_mean.csv";
  save_series_csv(opts.out_dir / report.mean_file, data.ground_truth.theoretical_mean,
                  {"warpmean synthetic theoretical mean",
                   "length: " + std::to_string(data.ground_truth.theoretical_mean.size())});

  json j;
  j["command"] = "synth";
  j["config"] = {{"n_series", opts.n_series},
                 {"seed", opts.seed},
                 {"threshold_reps", opts.threshold_reps},
                 {"out_dir", opts.out_dir.string()}};
  j["spec"] = spec_json(report.spec);
  j["landmark_mean_times"] = report.landmark_mean_times;
  j["landmark_time_sigmas"] = report.landmark_time_sigmas;
  j["landmark_mean_amplitudes"] = data.ground_truth.landmark_mean_amplitudes;
  j["noise_thresholds"] = {{"euclidean", report.thresholds.euclidean},
                           {"phase", report.thresholds.phase},
                           {"tam", report.thresholds.tam}};
  j["files"] = {{"dataset", report.dataset_file}, {"theoretical_mean", report.mean_file}};

  report.ground_truth_file = "ground_truth.json";
  std::ofstream out(opts.out_dir / report.ground_truth_file);
  if (!out) throw std::runtime_error("cannot write ground_truth.json");
  out << j.dump(2) << '\n';

  return report;
}

}  // namespace warpmean::cli
