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

// Executable forms of the entropic inequalities relating a channel's map
// entropy, receiver entropy and the spectra of its superoperator Phi and
// dynamical matrix D = Phi^R. Each check returns BoundRecords carrying both
// sides numerically so slacks can be analysed downstream.
//
// Notation used in record descriptions:
//   sigma1  largest singular value of Phi     Lambda  trace norm of Phi
//   d1      largest eigenvalue of D           tau1    largest eigenvalue of Phi(1/N)
//   F_min = min(q/(q-1), 2), F_max = max(q/(q-1), 2),
//   G_min = min(q/(2(q-1)), 2(q-1)/q).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qchan/channels.hpp"
#include "qchan/matcore.hpp"

namespace qchan {

enum class Relation { le, ge, eq };

const char* relation_symbol(Relation r);

struct BoundRecord {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::le;
  /// rhs - lhs for <=, lhs - rhs for >=, -|lhs - rhs| for =.
  double slack = 0.0;
  bool satisfied = false;
  std::string citation;
  /// Non-empty when evaluating the record raised an error.
  std::string error;
};

/// Builds a record and derives slack/satisfied with tol::check.
BoundRecord make_record(std::string id, double lhs, Relation relation, double rhs,
                        std::string citation);

/// Renyi-order dependent coefficients; q = 1 gives F_min = 2, F_max = inf,
/// G_min = 0 and q = inf gives F_min = 1, F_max = 2, G_min = 1/2.
double f_min(RenyiOrder q);
double f_max(RenyiOrder q);
double g_min(RenyiOrder q);

struct BoundAggregates {
  double sigma1 = 0.0;
  double tau1 = 0.0;
  double d1 = 0.0;
  double lambda_phi = 0.0;
  double f_min = 0.0;
  double f_max = 0.0;
  double g_min = 0.0;
};

struct BoundReport {
  std::string channel_label;
  RenyiOrder q{1.0};
  std::vector<BoundRecord> records;  // sorted by id
  BoundAggregates aggregates;

  bool all_satisfied() const;
  const BoundRecord* find(const std::string& id) const;
};

/// Largest singular value of the superoperator.
double sigma1(const Channel& ch);

/// One-sided brute-force estimate of sigma1 from its variational form
///   sigma1 = max_rho sqrt(Tr Phi(rho)^2 / Tr rho^2):
/// `budget` Hilbert-Schmidt random states, then 200 steps mixing the
/// incumbent with random perturbation states. Never exceeds sigma1.
double sigma1_oracle(const Channel& ch, std::size_t budget, std::uint64_t seed);

/// ||x||_q <= ||x||_1^(1/q) ||x||_inf^((q-1)/q) for a non-negative vector.
BoundRecord check_norm_interpolation(std::span<const double> x, RenyiOrder q);

/// ln(Lambda_x/x1) <= S_q(X) <= q/(q-1) ln(Lambda_x/x1). q = 1 yields only
/// the lower record; q < 1 throws DomainError.
std::vector<BoundRecord> check_spectral_envelope(const ComplexMatrix& x, RenyiOrder q);

/// With Y = reorder(X, perm):
///   F_min ln(Lambda_y / sqrt(x1 Lambda_x)) <= S_q(Y) <= F_max ln(Lambda_y / x1).
/// q = 1 yields only the lower record; q < 1 throws DomainError.
std::vector<BoundRecord> check_reordering_envelope(const ComplexMatrix& x, const PermutationMap& perm,
                                      RenyiOrder q);

/// The four individual envelopes on S_q^rec and S_q^map (lower and upper
/// each); at q = 1 only the four lower records are produced.
std::vector<BoundRecord> individual_bounds(const Channel& ch, RenyiOrder q);

/// sigma1 <= sqrt(N tau1).
BoundRecord sigma1_output_bound(const Channel& ch);

/// S_q^map + S_q^rec >= (F_min/2) ln(N / tau1). Throws DomainError for q < 1.
BoundRecord tradeoff_lower(const Channel& ch, RenyiOrder q);
/// S_q^map + S_q^rec >= (F_min/2) ln N, valid for every channel.
BoundRecord tradeoff_general(const Channel& ch, RenyiOrder q);
/// S_q^map + S_q^rec >= F_min ln N, valid for unital channels.
BoundRecord tradeoff_bistochastic(const Channel& ch, RenyiOrder q);

/// Closed-form upper bound on the receiver entropy for trace norm `lambda`
/// in dimension n (the entropy of the least-spread singular vector with
/// sigma1 = 1). Throws NumericalError when lambda < 1 - 1e-9.
double receiver_upper_value(double lambda, std::size_t n, RenyiOrder q);
BoundRecord receiver_upper(const Channel& ch, RenyiOrder q);

/// S_2^map = S_2^rec + 2 ln N - 2 ln Lambda.
BoundRecord s2_identity(const Channel& ch);

/// S_2^map + S_2^rec <= 2 ln(N(N+1)/2).
BoundRecord sum_upper_q2(const Channel& ch);

/// S_q^map >= F_min ln(N/Lambda) + G_min S_q^rec for q >= 1.
BoundRecord map_lower_from_rec(const Channel& ch, RenyiOrder q);

/// S^rec <= ln N <= S^map at q = 1 for channels built by interval_channel.
std::vector<BoundRecord> interval_check(const Channel& ch);

/// ln N - S(Phi(1/N)) <= S^map (q = 1 only), S_q^map <= ln N + S_q(Phi(1/N)),
/// and S_q^map >= ln N - ln rank Phi(1/N).
std::vector<BoundRecord> output_entropy_sandwich(const Channel& ch, RenyiOrder q);

/// Runs every applicable check above. Errors inside one check become a
/// failed record with `error` set; the report is always complete.
BoundReport evaluate_all(const Channel& ch, RenyiOrder q);

}  // namespace qchan
