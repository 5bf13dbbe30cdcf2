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

// Command implementations shared by the C API and the command-line tool.
// Every command returns its full text output so callers decide where it goes.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qchan/channels.hpp"
#include "qchan/matcore.hpp"

namespace qchan {

/// Entropies, spectral aggregates, Bloch ellipsoid (unital qubits), bound
/// reports and separability verdicts for every order in `qs`. Verdicts are
/// computed for orders >= 1, or at q = 2 when the list has none. With
/// `bits` the "entropies" block is reported in bits; bound reports stay in nats.
nlohmann::json analyze_channel(const Channel& ch, const std::vector<RenyiOrder>& qs, bool bits = false);

enum class ScanMode { entropy_plane, appendix_c_plane };
enum class OutputFormat { csv, json };

struct ScanConfig {
  ScanMode mode = ScanMode::entropy_plane;
  /// random_cptp, random_bistochastic, pauli, interval, reshuffle_invariant,
  /// depolarizing, complete_contraction.
  std::string ensemble = "random_cptp";
  std::size_t n_samples = 1000;
  std::size_t dim = 2;
  RenyiOrder q{1.0};
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::csv;
  /// 0 picks the hardware concurrency; QCHAN_THREADS caps either way.
  std::size_t threads = 0;
  /// Environment dimension for random_cptp; 0 means dim^2.
  std::size_t env_dim = 0;
  /// Mixture size for random_bistochastic; 0 means dim^2.
  std::size_t mixture_size = 0;
};

ScanMode parse_scan_mode(const std::string& text);
OutputFormat parse_output_format(const std::string& text);
const std::vector<std::string>& scan_ensembles();

/// Throws DomainError/DimensionError for out-of-range settings.
void validate_scan_config(const ScanConfig& cfg);

/// Fixed CSV header of scan output.
std::vector<std::string> scan_columns();

/// Sample `index` of the configured ensemble (seed derived from cfg.seed).
Channel scan_sample(const ScanConfig& cfg, std::size_t index);

/// The whole dataset as CSV or JSON text; byte-identical for a fixed
/// configuration regardless of thread count.
std::string run_scan(const ScanConfig& cfg);

/// gnuplot script plotting `data_path` (CSV) in the configured plane.
std::string scan_gnuplot_script(const ScanConfig& cfg, const std::string& data_path);

/// "ab", "interval_cd", "diagonal_Rinv".
const std::vector<std::string>& curve_names();

/// CSV with header "param,s_map,s_rec" and `grid` rows, param = i/(grid-1).
std::string run_curve(const std::string& name, std::size_t grid, RenyiOrder q = RenyiOrder(1.0));

struct VerifyConfig {
  /// all, bounds, lemmas, separability, zoo.
  std::string suite = "all";
  std::size_t n = 200;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  /// Extra channel checked against every bound (negative control).
  std::optional<Channel> injected;
};

struct VerifyOutcome {
  std::string summary;
  bool passed = false;
};

const std::vector<std::string>& verify_suites();

VerifyOutcome run_verify(const VerifyConfig& cfg);

}  // namespace qchan
