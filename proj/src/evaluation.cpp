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

#include "jetcut/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace jetcut {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  for (auto& c : cells)
    if (!c.empty() && c.back() == '\r') c.pop_back();
  return cells;
}

template <typename T>
void put(std::ostream& out, const std::optional<T>& v) {
  if (v) out << *v;
}

MetricRecord invalid_record(std::int64_t id, const std::string& algo) {
  return {id, algo, std::numbers::pi, std::numbers::pi, kInvalidSum, false};
}

}  // namespace

MetricRecord score(const Event& event, const Partition& x,
                   const std::string& algorithm) {
  if (x.n() != static_cast<int>(event.size()))
    throw std::invalid_argument("score: partition size != particle count");
  const auto& bits = x.bits();
  const bool has0 = std::find(bits.begin(), bits.end(), 0) != bits.end();
  const bool has1 = std::find(bits.begin(), bits.end(), 1) != bits.end();
  if (!has0 || !has1) return invalid_record(event.id(), algorithm);

  const Vec3 j0 = jet_momentum(event, x, 0).p;
  const Vec3 j1 = jet_momentum(event, x, 1).p;
  if (!(j0.norm() > 0.0) || !(j1.norm() > 0.0))
    return invalid_record(event.id(), algorithm);

  const auto& q = event.truth_axes();
  const double a00 = angle_between(j0, q[0]);
  const double a11 = angle_between(j1, q[1]);
  const double a01 = angle_between(j0, q[1]);
  const double a10 = angle_between(j1, q[0]);
  MetricRecord r{event.id(), algorithm, a00, a11, a00 + a11, true};
  if (a01 + a10 < r.sum) {
    r.angle1 = a01;
    r.angle2 = a10;
    r.sum = a01 + a10;
  }
  return r;
}

MetricRecord score(const Event& event, const JetResult& result) {
  return score(event, result.assignment, result.algorithm);
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) throw std::invalid_argument("quantile: empty input");
  std::sort(v.begin(), v.end());
  const double pos =
      std::clamp(q, 0.0, 1.0) * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  const double f = pos - static_cast<double>(lo);
  return v[lo] + f * (v[hi] - v[lo]);
}

std::map<std::string, AlgorithmSummary> aggregate(
    std::span<const MetricRecord> records, const AggregateOptions& opts) {
  if (records.empty()) throw std::invalid_argument("aggregate: no records");
  if (opts.bins < 1 || !(opts.hi > opts.lo))
    throw std::invalid_argument("aggregate: bad histogram binning");

  std::map<std::string, std::vector<double>> sums;
  std::map<std::string, AlgorithmSummary> out;
  for (const auto& r : records) {
    auto& s = out[r.algorithm];
    s.algorithm = r.algorithm;
    ++s.count;
    if (r.valid) {
      ++s.valid_count;
      sums[r.algorithm].push_back(r.sum);
    }
  }

  const double width = (opts.hi - opts.lo) / opts.bins;
  for (auto& [algo, s] : out) {
    s.histogram = {opts.lo, opts.hi,
                   std::vector<int>(static_cast<std::size_t>(opts.bins), 0), 0,
                   0};
    const auto it = sums.find(algo);
    if (it == sums.end()) continue;
    const auto& v = it->second;

    Quartiles st;
    double total = 0.0;
    for (double x : v) total += x;
    st.mean = total / static_cast<double>(v.size());
    st.median = quantile(v, 0.5);
    st.q1 = quantile(v, 0.25);
    st.q3 = quantile(v, 0.75);
    st.min = *std::min_element(v.begin(), v.end());
    st.max = *std::max_element(v.begin(), v.end());
    s.stats = st;

    for (double x : v) {
      if (x < opts.lo) {
        ++s.histogram.underflow;
      } else if (x > opts.hi) {
        ++s.histogram.overflow;
      } else {
        auto b = static_cast<std::size_t>((x - opts.lo) / width);
        b = std::min(b, static_cast<std::size_t>(opts.bins - 1));
        ++s.histogram.counts[b];
      }
    }
  }
  return out;
}

void write_summary_json(const std::map<std::string, AlgorithmSummary>& s,
                        std::ostream& out) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [algo, a] : s) {
    nlohmann::json e{{"count", a.count},
                     {"valid_count", a.valid_count},
                     {"invalid_count", a.count - a.valid_count}};
    if (a.stats) {
      e["mean"] = a.stats->mean;
      e["median"] = a.stats->median;
      e["q1"] = a.stats->q1;
      e["q3"] = a.stats->q3;
      e["min"] = a.stats->min;
      e["max"] = a.stats->max;
    } else {
      e["statistics"] = nullptr;
    }
    e["histogram"] = {{"lo", a.histogram.lo},
                      {"hi", a.histogram.hi},
                      {"counts", a.histogram.counts},
                      {"underflow", a.histogram.underflow},
                      {"overflow", a.histogram.overflow}};
    j[algo] = std::move(e);
  }
  out << j.dump(2) << '\n';
}

void write_histogram_csv(const std::map<std::string, AlgorithmSummary>& s,
                         std::ostream& out) {
  out << "algorithm,bin_lo,bin_hi,count\n" << std::setprecision(10);
  for (const auto& [algo, a] : s) {
    const auto& h = a.histogram;
    const double width = (h.hi - h.lo) / static_cast<double>(h.counts.size());
    for (std::size_t b = 0; b < h.counts.size(); ++b)
      out << algo << ',' << h.lo + width * b << ',' << h.lo + width * (b + 1)
          << ',' << h.counts[b] << '\n';
  }
}

MetricRecord ResultRow::metric() const {
  return {event_id, algorithm, angle1, angle2, sum, valid};
}

void write_results_header(std::ostream& out) { out << kResultsHeader << '\n'; }

void write_result_row(const ResultRow& r, std::ostream& out) {
  const auto prec = out.precision(17);
  out << r.algorithm << ',' << r.event_id << ',';
  put(out, r.depth);
  out << ',';
  put(out, r.k);
  out << ',';
  put(out, r.expectation);
  out << ',';
  put(out, r.best_sample_value);
  out << ',';
  put(out, r.c_max);
  out << ',' << r.bitstring << ',';
  put(out, r.eval_count);
  out << ',' << r.angle1 << ',' << r.angle2 << ',' << r.sum << ','
      << (r.valid ? 1 : 0) << '\n';
  out.precision(prec);
}

std::vector<ResultRow> read_results(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  const auto header = split_csv(line);
  auto col = [&](const std::string& name) -> std::ptrdiff_t {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : it - header.begin();
  };
  for (const char* required :
       {"algorithm", "event_id", "angle1", "angle2", "sum", "valid"})
    if (col(required) < 0)
      throw std::runtime_error(std::string("results csv: missing column ") +
                               required);

  std::vector<ResultRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_csv(line);
    auto cell = [&](const std::string& name) -> std::string {
      const auto c = col(name);
      return c >= 0 && static_cast<std::size_t>(c) < cells.size()
                 ? cells[static_cast<std::size_t>(c)]
                 : "";
    };
    try {
      ResultRow r;
      r.algorithm = cell("algorithm");
      r.event_id = std::stoll(cell("event_id"));
      if (auto s = cell("depth"); !s.empty()) r.depth = std::stoi(s);
      if (auto s = cell("k"); !s.empty()) r.k = std::stoi(s);
      if (auto s = cell("expectation"); !s.empty())
        r.expectation = std::stod(s);
      if (auto s = cell("best_sample_value"); !s.empty())
        r.best_sample_value = std::stod(s);
      if (auto s = cell("c_max"); !s.empty()) r.c_max = std::stod(s);
      r.bitstring = cell("bitstring");
      if (auto s = cell("eval_count"); !s.empty()) r.eval_count = std::stoi(s);
      r.angle1 = std::stod(cell("angle1"));
      r.angle2 = std::stod(cell("angle2"));
      r.sum = std::stod(cell("sum"));
      r.valid = cell("valid") == "1";
      rows.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw std::runtime_error("results csv line " + std::to_string(lineno) +
                               ": " + e.what());
    }
  }
  return rows;
}

}  // namespace jetcut
