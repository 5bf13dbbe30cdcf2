// Copyright 2026 The qchan Authors
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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "parallel.hpp"
#include "qchan/bounds.hpp"
#include "qchan/commands.hpp"
#include "qchan/entropy.hpp"
#include "qchan/errors.hpp"
#include "qchan/report_io.hpp"
#include "qchan/rng.hpp"
#include "qchan/separability.hpp"
#include "qchan/tolerances.hpp"
#include "qchan/zoo.hpp"

namespace qchan {

using nlohmann::json;

namespace {

const std::vector<std::string>& slack_ids() {
  static const std::vector<std::string> ids = {
      "interval.map",          "interval.receiver",      "map_d1.lower",
      "map_d1.upper",          "map_lower_from_rec",     "map_reshuffle.lower",
      "map_reshuffle.upper",   "output_rank.lower",      "output_sandwich.lower",
      "output_sandwich.upper", "rec_reshuffle.lower",    "rec_reshuffle.upper",
      "rec_sigma.lower",       "rec_sigma.upper",        "receiver_upper",
      "s2_identity",           "separable.map_floor",    "separable.map_vs_rec",
      "separable.receiver_cap", "sigma1_output",         "sum_upper_q2",
      "tradeoff.bistochastic", "tradeoff.general",       "tradeoff.interpolated"};
  return ids;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct ScanRow {
  std::string label;
  std::size_t index = 0;
  double s_map = kNaN;
  double s_rec = kNaN;
  double s_output = kNaN;
  double sigma1 = kNaN;
  double tau1 = kNaN;
  double d1 = kNaN;
  double lambda_phi = kNaN;
  std::string region = "n/a";
  std::map<std::string, double> slacks;
  std::string error;
};

bool at_least_one(RenyiOrder q) {
  return q.is_infinite() || q.value() >= 1.0 - tol::shannon_window;
}

ScanRow evaluate_row(const ScanConfig& cfg, std::size_t index) {
  ScanRow row;
  row.index = index;
  try {
    const Channel ch = scan_sample(cfg, index);
    row.label = ch.label();
    row.s_map = map_entropy(ch, cfg.q);
    row.s_rec = receiver_entropy(ch, cfg.q);
    row.s_output = output_entropy(ch, cfg.q);
    row.sigma1 = ch.superoperator_singular_values().largest();
    row.lambda_phi = ch.superoperator_singular_values().total;
    row.d1 = ch.choi_eigenvalues().largest();
    row.tau1 = output_of_maximally_mixed(ch).tau1;
    const BoundReport report = evaluate_all(ch, cfg.q);
    for (const auto& r : report.records) {
      if (r.error.empty()) {
        row.slacks[r.id] = r.slack;
      } else if (row.error.empty()) {
        row.error = r.id + ": " + r.error;
      }
    }
    if (at_least_one(cfg.q)) {
      const SeparabilityVerdict v = classify_region(ch, cfg.q);
      row.region = region_name(v.region);
      for (const auto& c : v.criteria) row.slacks[c.id] = c.slack;
    }
  } catch (const Error& e) {
    if (row.label.empty()) row.label = cfg.ensemble;
    row.region = "error";
    row.error = e.what();
  }
  return row;
}

std::string order_text(RenyiOrder q) { return q.is_infinite() ? "inf" : format_number(q.value()); }

std::string csv_line(const ScanConfig& cfg, const ScanRow& row) {
  std::ostringstream os;
  os << csv_field(row.label) << ',' << row.index << ',' << order_text(cfg.q) << ','
     << format_number(row.s_map) << ',' << format_number(row.s_rec) << ','
     << format_number(row.s_output) << ',' << format_number(row.sigma1) << ','
     << format_number(row.tau1) << ',' << format_number(row.d1) << ','
     << format_number(row.lambda_phi) << ',' << row.region;
  for (const auto& id : slack_ids()) {
    os << ',';
    auto it = row.slacks.find(id);
    if (it != row.slacks.end()) os << format_number(it->second);
  }
  os << ',' << csv_field(row.error) << '\n';
  return os.str();
}

json json_row(const ScanRow& row) {
  json j;
  j["label"] = row.label;
  j["seed_index"] = row.index;
  j["s_map"] = json_number(row.s_map);
  j["s_rec"] = json_number(row.s_rec);
  j["s_output"] = json_number(row.s_output);
  j["sigma1"] = json_number(row.sigma1);
  j["tau1"] = json_number(row.tau1);
  j["d1"] = json_number(row.d1);
  j["lambda_phi"] = json_number(row.lambda_phi);
  j["region"] = row.region;
  json slacks = json::object();
  for (const auto& [id, v] : row.slacks) slacks[id] = json_number(v);
  j["slacks"] = std::move(slacks);
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

}  // namespace

ScanMode parse_scan_mode(const std::string& text) {
  if (text == "entropy_plane") return ScanMode::entropy_plane;
  if (text == "appendixC_plane" || text == "output_plane") return ScanMode::appendix_c_plane;
  throw DomainError("unknown scan mode '" + text + "' (entropy_plane, appendixC_plane)");
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw DomainError("unknown output format '" + text + "' (csv, json)");
}

const std::vector<std::string>& scan_ensembles() {
  static const std::vector<std::string> names = {
      "random_cptp", "random_bistochastic", "pauli", "interval",
      "reshuffle_invariant", "depolarizing", "complete_contraction"};
  return names;
}

void validate_scan_config(const ScanConfig& cfg) {
  if (cfg.n_samples < 1) throw DomainError("scan needs at least one sample");
  if (cfg.dim < 2 || cfg.dim > 8) throw DimensionError("scan dim must lie in [2, 8], got " + std::to_string(cfg.dim));
  const auto& names = scan_ensembles();
  if (std::find(names.begin(), names.end(), cfg.ensemble) == names.end()) {
    throw DomainError("unknown ensemble '" + cfg.ensemble + "'");
  }
  if ((cfg.ensemble == "pauli" || cfg.ensemble == "interval" || cfg.ensemble == "reshuffle_invariant") &&
      cfg.dim != 2) {
    throw DimensionError("ensemble '" + cfg.ensemble + "' is defined for dim 2 only");
  }
  if (cfg.env_dim > cfg.dim * cfg.dim) {
    throw DomainError("env_dim must not exceed dim^2 = " + std::to_string(cfg.dim * cfg.dim));
  }
  if (!cfg.q.is_infinite() && !(cfg.q.value() >= 0.0)) {
    throw DomainError("Renyi order must be non-negative, got " + cfg.q.to_string());
  }
}

std::vector<std::string> scan_columns() {
  std::vector<std::string> cols = {"label", "seed_index", "q",  "s_map",      "s_rec", "s_output",
                                   "sigma1", "tau1",      "d1", "lambda_phi", "region"};
  for (const auto& id : slack_ids()) cols.push_back("slack:" + id);
  cols.push_back("error");
  return cols;
}

Channel scan_sample(const ScanConfig& cfg, std::size_t index) {
  RngStream rng(derive_seed(cfg.seed, index));
  const std::size_t n = cfg.dim;
  const std::string& e = cfg.ensemble;
  if (e == "random_cptp") return random_cptp(n, cfg.env_dim ? cfg.env_dim : n * n, rng);
  if (e == "random_bistochastic") return random_bistochastic(n, cfg.mixture_size ? cfg.mixture_size : n * n, rng);
  if (e == "pauli") return random_pauli_channel(rng);
  if (e == "interval") return random_interval_channel(rng);
  if (e == "reshuffle_invariant") return random_reshuffle_invariant(rng);
  if (e == "depolarizing") return depolarizing(n, rng.uniform());
  if (e == "complete_contraction") return complete_contraction(random_density(n, rng));
  throw DomainError("unknown ensemble '" + e + "'");
}

std::string run_scan(const ScanConfig& cfg) {
  validate_scan_config(cfg);
  const auto rows = detail::parallel_map<ScanRow>(cfg.n_samples, detail::resolve_threads(cfg.threads),
                                                  [&](std::size_t i) { return evaluate_row(cfg, i); });
  if (cfg.format == OutputFormat::json) {
    json doc;
    doc["mode"] = cfg.mode == ScanMode::entropy_plane ? "entropy_plane" : "appendixC_plane";
    doc["ensemble"] = cfg.ensemble;
    doc["dim"] = cfg.dim;
    doc["q"] = json_order(cfg.q);
    doc["seed"] = cfg.seed;
    doc["n_samples"] = cfg.n_samples;
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(json_row(r));
    doc["rows"] = std::move(arr);
    return doc.dump(1) + "\n";
  }
  std::string out;
  const auto cols = scan_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += '\n';
  for (const auto& r : rows) out += csv_line(cfg, r);
  return out;
}

std::string scan_gnuplot_script(const ScanConfig& cfg, const std::string& data_path) {
  const double ln_n = std::log(static_cast<double>(cfg.dim));
  std::ostringstream os;
  os << "# gnuplot script for " << data_path << "\n"
     << "set datafile separator ','\n"
     << "set key outside\n";
  if (cfg.mode == ScanMode::entropy_plane) {
    os << "set xlabel 'S_q^{map}'\nset ylabel 'S_q^{rec}'\n"
       << "set xrange [0:" << format_number(2 * ln_n) << "]\nset yrange [0:" << format_number(2 * ln_n) << "]\n"
       << "plot '" << data_path << "' using 4:5 every ::1 with points pt 7 ps 0.3 title '"
       << cfg.ensemble << "', \\\n"
       << "     " << format_number(ln_n) << " - x with lines title 'sum = ln N', \\\n"
       << "     " << format_number(2 * ln_n) << " - x with lines title 'sum = 2 ln N'\n";
  } else {
    os << "set xlabel 'S(Phi(1/N))'\nset ylabel 'S^{map}'\n"
       << "set xrange [0:" << format_number(ln_n) << "]\nset yrange [0:" << format_number(2 * ln_n) << "]\n"
       << "plot '" << data_path << "' using 6:4 every ::1 with points pt 7 ps 0.3 title '"
       << cfg.ensemble << "', \\\n"
       << "     " << format_number(ln_n) << " - x with lines title 'ln N - S', \\\n"
       << "     " << format_number(ln_n) << " + x with lines title 'ln N + S'\n";
  }
  return os.str();
}

}  // namespace qchan
