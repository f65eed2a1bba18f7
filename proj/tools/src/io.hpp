#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "warpmean/series.hpp"

namespace warpmean::cli {

/// Parses the UCR text layout: one series per line, tab- or
/// comma-separated (auto-detected from the first line; mixing both in one
/// file is an error). With label_first the leading field is kept as an
/// opaque class label; otherwise every field is a value and the dataset
/// carries no labels. Throws std::runtime_error with the offending line
/// number on malformed input.
Dataset load_ucr(const std::filesystem::path& path, bool label_first = true);

/// Writes a dataset in the same layout, full double precision.
void save_ucr(const std::filesystem::path& path, const Dataset& d, char separator = '\t');

/// One series as a CSV table: '#'-prefixed metadata lines, a header row
/// naming one column per sample, one data row.
void save_series_csv(const std::filesystem::path& path, const TimeSeries& s,
                     const std::vector<std::string>& metadata);

TimeSeries load_series_csv(const std::filesystem::path& path);

}  // namespace warpmean::cli
