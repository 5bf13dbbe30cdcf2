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

// Renyi entropies of spectra and the two channel functionals built on them:
// the map entropy (spectrum of the Jamiolkowski-Choi state omega = D/N) and
// the receiver entropy (normalized singular values of the superoperator).
// All values are in nats.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qchan/channels.hpp"
#include "qchan/matcore.hpp"

namespace qchan {

/// Non-negative weights summing to one within 1e-10.
class ProbabilityVector {
 public:
  /// Throws ValidationError unless every weight lies in [0, 1 + 1e-12] and
  /// the sum is 1 within 1e-10.
  explicit ProbabilityVector(std::vector<double> weights);

  /// Normalizes a non-negative spectrum. Entries at or below
  /// tol::spectrum_zero times the largest one become exact zeros; negative
  /// entries must already have been clamped by the caller.
  static ProbabilityVector from_spectrum(std::span<const double> values);

  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

 private:
  struct Unchecked {};
  ProbabilityVector(std::vector<double> weights, Unchecked) : weights_(std::move(weights)) {}
  std::vector<double> weights_;
};

/// S_q(p) = ln(sum p_i^q) / (1 - q) for q >= 0; Shannon at q = 1 (and for
/// |q - 1| < 1e-6), -ln max p_i at q = infinity. Throws DomainError for q < 0.
double renyi(const ProbabilityVector& p, RenyiOrder q);

/// Renyi entropy of the normalized singular values of an arbitrary matrix.
double matrix_renyi(const ComplexMatrix& x, RenyiOrder q);

/// Renyi entropy of a density matrix's spectrum.
double state_entropy(const ComplexMatrix& rho, RenyiOrder q);

/// lambda(D)/N after clamping eigenvalues within the PSD tolerance to zero.
/// Throws ValidationError when D has an eigenvalue below -psd_tol.
ProbabilityVector map_spectrum(const Channel& ch);
/// mu_i = sigma_i / Lambda_Phi.
ProbabilityVector receiver_spectrum(const Channel& ch);

double map_entropy(const Channel& ch, RenyiOrder q);
double receiver_entropy(const Channel& ch, RenyiOrder q);

/// S_q(kappa / N) with kappa_i = Tr A_i^dag A_i: the outcome entropy of the
/// POVM {A_i^dag A_i} measured on the maximally mixed state.
double povm_entropy(const KrausSet& kraus, RenyiOrder q);

/// Von Neumann entropy of (Phi kron 1)(|phi_rho><phi_rho|) for the canonical
/// purification |phi_rho> = sum_i sqrt(rho)|i> kron |i>.
double exchange_entropy(const Channel& ch, const ComplexMatrix& rho);

/// S_q of the spectrum of Phi(1/N).
double output_entropy(const Channel& ch, RenyiOrder q);

/// Semi-axis lengths of the image of the Bloch ball under a unital qubit
/// channel: singular values of the traceless block of the superoperator in
/// the normalized Pauli basis, in ascending order. Throws DomainError unless
/// N = 2 and the channel is unital.
std::array<double, 3> bloch_ellipsoid(const Channel& ch);

struct EntropyExtras {
  double lambda_phi = 0.0;
  double sigma1 = 0.0;
  double tau1 = 0.0;
  double d1 = 0.0;
};

/// One point of the (S_q^map, S_q^rec) plane.
struct EntropyPoint {
  RenyiOrder q{1.0};
  double s_map = 0.0;
  double s_rec = 0.0;
  std::string channel_label;
  std::optional<EntropyExtras> extras;
};

EntropyPoint entropy_point(const Channel& ch, RenyiOrder q, bool with_extras = true);

}  // namespace qchan
