#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "msm/matchers.hpp"
#include "msm/metrics.hpp"

namespace msm {

// Malformed or unreadable files. The CLI maps this to exit code 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// MSMF: the line-oriented dataset format (grammar in docs/formats.md).
// Floats are written with 17 significant digits, so read(write(d)) == d
// bit-exactly.
Dataset read_msmf(std::istream& in);
Dataset read_msmf_file(const std::string& path);
void write_msmf(std::ostream& out, const Dataset& data);
void write_msmf_file(const std::string& path, const Dataset& data);

// MSMR: a matching result, either a star (index lists against a reference)
// or a full pairwise configuration.
struct MatchResult {
  std::optional<StarConfiguration> star;
  std::optional<MatchConfiguration> config;
};

MatchResult read_msmr(std::istream& in);
MatchResult read_msmr_file(const std::string& path);
void write_msmr(std::ostream& out, const MatchResult& result);
void write_msmr_file(const std::string& path, const MatchResult& result);

// Fixed CSV schema shared by `match` report lines and `bench` output.
std::string csv_header();
std::string csv_row(const TrialReport& report);

// Appends zero-attribute dummy nodes until every set reaches the common
// maximum node count; ground-truth labels extend with the outlier sentinel.
void pad_dataset(Dataset& data);

bool is_ragged(const Dataset& data);

}  // namespace msm
