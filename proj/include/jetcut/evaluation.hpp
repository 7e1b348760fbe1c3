// Copyright 2026 The jetcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetcut/baselines.hpp"
#include "jetcut/event.hpp"
#include "jetcut/maxcut.hpp"

namespace jetcut {

/// Angle-sum score of one clustered event. Invalid records (an empty jet or
/// a jet with vanishing 3-momentum) carry angles of pi and sum = 2 pi.
struct MetricRecord {
  std::int64_t event_id = 0;
  std::string algorithm;
  double angle1 = 0.0;
  double angle2 = 0.0;
  double sum = 0.0;
  bool valid = true;
};

inline constexpr double kInvalidSum = 2.0 * std::numbers::pi;

/// Jet axes are the directions of the summed 3-momenta on each side; the
/// (jet, quark) pairing is whichever of the two matchings gives the smaller
/// angle sum.
MetricRecord score(const Event& event, const Partition& x,
                   const std::string& algorithm);
MetricRecord score(const Event& event, const JetResult& result);

struct Quartiles {
  double mean = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct HistogramBins {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<int> counts;
  int underflow = 0;
  int overflow = 0;  // valid sums above hi
};

struct AlgorithmSummary {
  std::string algorithm;
  int count = 0;
  int valid_count = 0;
  std::optional<Quartiles> stats;  // absent when nothing is valid
  HistogramBins histogram;
};

struct AggregateOptions {
  int bins = 60;
  double lo = 0.0;
  double hi = std::numbers::pi;
};

/// Per-algorithm statistics over the valid records; quartiles use linear
/// interpolation between order statistics. Throws on empty input.
std::map<std::string, AlgorithmSummary> aggregate(
    std::span<const MetricRecord> records, const AggregateOptions& opts = {});

/// Linear-interpolation quantile of unsorted data, q in [0, 1].
double quantile(std::vector<double> values, double q);

void write_summary_json(const std::map<std::string, AlgorithmSummary>& s,
                        std::ostream& out);
/// Columns: algorithm,bin_lo,bin_hi,count (one row per bin per algorithm).
void write_histogram_csv(const std::map<std::string, AlgorithmSummary>& s,
                         std::ostream& out);

/// One row of the shared results CSV written by the qaoa, baseline and bench
/// commands. QAOA-only columns are empty for classical rows.
struct ResultRow {
  std::string algorithm;
  std::int64_t event_id = 0;
  std::optional<int> depth;
  std::optional<int> k;
  std::optional<double> expectation;
  std::optional<double> best_sample_value;
  std::optional<double> c_max;
  std::string bitstring;
  std::optional<int> eval_count;
  double angle1 = 0.0;
  double angle2 = 0.0;
  double sum = 0.0;
  bool valid = true;

  MetricRecord metric() const;
};

inline constexpr const char* kResultsHeader =
    "algorithm,event_id,depth,k,expectation,best_sample_value,c_max,"
    "bitstring,eval_count,angle1,angle2,sum,valid";

void write_results_header(std::ostream& out);
void write_result_row(const ResultRow& row, std::ostream& out);
/// Reads a results CSV; columns are located by header name.
std::vector<ResultRow> read_results(std::istream& in);

}  // namespace jetcut
