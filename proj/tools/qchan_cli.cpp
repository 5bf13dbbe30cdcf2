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

// qchan command-line tool. Exit codes: 0 success, 1 property violation,
// 2 input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qchan/qchan.h"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Failure {
  int code;
  std::string message;
};

void check(qchan_status status, const std::string& context) {
  if (status != QCHAN_OK) {
    throw Failure{kExitInput, context + ": " + qchan_status_name(status) + ": " + qchan_last_error()};
  }
}

/// Takes ownership of a library string.
std::string take(char* text) {
  std::string s(text ? text : "");
  qchan_string_free(text);
  return s;
}

double parse_order(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "∞") return INFINITY;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || std::isnan(v) || v < 0.0) {
    throw Failure{kExitInput, "invalid Renyi order '" + text + "'"};
  }
  return v;
}

std::vector<double> parse_order_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_order(item));
  }
  if (out.empty()) throw Failure{kExitInput, "empty Renyi order list"};
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw Failure{kExitInput, "cannot write '" + path + "'"};
}

struct ChannelHandle {
  qchan_channel* ptr = nullptr;
  ~ChannelHandle() { qchan_channel_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qchan: entropies, entropic bounds and separability tests for quantum channels"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qchan_version()));

  std::string spec_path, q_list = "1,2", analyze_out;
  auto* analyze = app.add_subcommand("analyze", "Report entropies, bounds and separability of one channel");
  analyze->add_option("--spec", spec_path, "Channel spec JSON file")->required();
  analyze->add_option("--q", q_list, "Comma-separated Renyi orders (inf allowed)");
  analyze->add_option("--out", analyze_out, "Output file (default stdout)");
  bool bits = false;
  analyze->add_flag("--bits", bits, "Report entropies in bits instead of nats");

  qchan_scan_config scan_cfg;
  qchan_scan_config_init(&scan_cfg);
  std::string scan_mode = "entropy_plane", ensemble = "random_cptp", scan_q = "1", format = "csv", scan_out,
              gnuplot_out;
  auto* scan = app.add_subcommand("scan", "Sample an ensemble and tabulate entropies and bound slacks");
  scan->add_option("--mode", scan_mode, "entropy_plane or appendixC_plane");
  scan->add_option("--ensemble", ensemble,
                   "random_cptp, random_bistochastic, pauli, interval, reshuffle_invariant, depolarizing, "
                   "complete_contraction");
  scan->add_option("--n", scan_cfg.n_samples, "Number of samples");
  scan->add_option("--dim", scan_cfg.dim, "Hilbert space dimension (2..8)");
  scan->add_option("--q", scan_q, "Renyi order (inf allowed)");
  scan->add_option("--seed", scan_cfg.seed, "Base seed");
  scan->add_option("--out", scan_out, "Output file (default stdout)");
  scan->add_option("--format", format, "csv or json");
  scan->add_option("--threads", scan_cfg.threads, "Worker threads (0: all cores)");
  scan->add_option("--env-dim", scan_cfg.env_dim, "Environment dimension for random_cptp (0: dim^2)");
  scan->add_option("--mixture-size", scan_cfg.mixture_size, "Unitaries per random_bistochastic draw (0: dim^2)");
  scan->add_option("--gnuplot", gnuplot_out, "Also write a gnuplot script for the CSV output");

  std::string curve_name, curve_out, curve_q = "1";
  std::size_t grid = 101;
  auto* curve = app.add_subcommand("curve", "Tabulate a one-parameter family in the entropy plane");
  curve->add_option("--name", curve_name, "ab, interval_cd or diagonal_Rinv")->required();
  curve->add_option("--grid", grid, "Number of grid points");
  curve->add_option("--q", curve_q, "Renyi order (inf allowed)");
  curve->add_option("--out", curve_out, "Output file (default stdout)");

  std::string suite = "all", inject_path, verify_out;
  std::size_t verify_n = 200, verify_threads = 0;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "Check every invariant on random instances");
  verify->add_option("--suite", suite, "all, bounds, lemmas, separability or zoo");
  verify->add_option("--n", verify_n, "Instances per suite");
  verify->add_option("--seed", verify_seed, "Base seed");
  verify->add_option("--threads", verify_threads, "Worker threads (0: all cores)");
  verify->add_option("--inject", inject_path, "Channel spec checked against every bound (negative control)");
  verify->add_option("--out", verify_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze) {
      const std::vector<double> qs = parse_order_list(q_list);
      ChannelHandle ch;
      check(qchan_channel_from_spec_file(spec_path.c_str(), &ch.ptr), "analyze");
      char* doc = nullptr;
      int ok = 0;
      check(qchan_analyze(ch.ptr, qs.data(), qs.size(), bits ? 1 : 0, &doc, &ok), "analyze");
      emit(take(doc), analyze_out);
      return ok ? 0 : kExitViolation;
    }
    if (*scan) {
      if (scan_mode == "entropy_plane") {
        scan_cfg.mode = QCHAN_SCAN_ENTROPY_PLANE;
      } else if (scan_mode == "appendixC_plane" || scan_mode == "output_plane") {
        scan_cfg.mode = QCHAN_SCAN_OUTPUT_PLANE;
      } else {
        throw Failure{kExitInput, "unknown scan mode '" + scan_mode + "'"};
      }
      if (format == "csv") {
        scan_cfg.format = QCHAN_FORMAT_CSV;
      } else if (format == "json") {
        scan_cfg.format = QCHAN_FORMAT_JSON;
      } else {
        throw Failure{kExitInput, "unknown format '" + format + "'"};
      }
      scan_cfg.ensemble = ensemble.c_str();
      scan_cfg.q = parse_order(scan_q);
      char* text = nullptr;
      check(qchan_scan(&scan_cfg, &text), "scan");
      emit(take(text), scan_out);
      if (!gnuplot_out.empty()) {
        char* script = nullptr;
        check(qchan_scan_gnuplot(&scan_cfg, scan_out.empty() ? "scan.csv" : scan_out.c_str(), &script), "scan");
        emit(take(script), gnuplot_out);
      }
      return 0;
    }
    if (*curve) {
      char* text = nullptr;
      check(qchan_curve(curve_name.c_str(), grid, parse_order(curve_q), &text), "curve");
      emit(take(text), curve_out);
      return 0;
    }
    if (*verify) {
      ChannelHandle injected;
      if (!inject_path.empty()) check(qchan_channel_from_spec_file(inject_path.c_str(), &injected.ptr), "verify");
      char* summary = nullptr;
      int passed = 0;
      check(qchan_verify(suite.c_str(), verify_n, verify_seed, verify_threads, injected.ptr, &summary, &passed),
            "verify");
      emit(take(summary), verify_out);
      return passed ? 0 : kExitViolation;
    }
  } catch (const Failure& f) {
    std::cerr << "qchan: " << f.message << '\n';
    return f.code;
  }
  return kExitInput;
}
