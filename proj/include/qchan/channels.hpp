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

// Quantum channels in Kraus, superoperator and dynamical-matrix (Choi) form.
//
// The superoperator acts on row-vectorized density matrices,
//   rho'_{kl} = Phi_{(k,l),(m,n)} rho_{mn},
// and the dynamical matrix is its reshuffle, D = Phi^R. For a Kraus set
// {A_i} this gives Phi = sum_i A_i kron conj(A_i) and
// D = sum_i |res A_i><res A_i| with res() the row-major vectorization.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qchan/matcore.hpp"

namespace qchan {

struct KrausSet {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> operators;
};

/// ||sum_i A_i^dag A_i - 1||_2. Throws DimensionError on ragged shapes.
double kraus_tp_defect(const KrausSet& kraus);

/// Shapes, finiteness, and trace preservation within tol::tp.
void validate_kraus(const KrausSet& kraus);

/// Traces kappa_i = Tr A_i^dag A_i, in operator order.
std::vector<double> kraus_weights(const KrausSet& kraus);

enum class Validation {
  strict,      // non-CP or non-TP input throws ValidationError
  permissive,  // any finite N^2 x N^2 matrix is accepted, flags record the defects
};

struct ChannelFlags {
  bool cp = false;
  bool tp = false;
  bool unital = false;
};

/// Magnitudes behind the flags, kept for diagnostics.
struct ChannelDefects {
  double choi_hermiticity = 0.0;  // relative
  double choi_min_eigenvalue = 0.0;
  double psd_threshold = 0.0;  // tol::psd * ||D||_2
  double tp = 0.0;             // ||Tr_A D - 1||_2
  double unital = 0.0;         // ||Phi(1/N) - 1/N||_2
};

/// Immutable CP-TP map with its superoperator, dynamical matrix and spectra
/// computed once at construction. Copies share the numeric state.
class Channel {
 public:
  std::size_t dim() const { return data_->dim; }
  const ComplexMatrix& superoperator() const { return data_->superop; }
  /// D_Phi = reshuffle(superoperator()), trace N for a TP map.
  const ComplexMatrix& choi() const { return data_->choi; }
  /// omega_Phi = D_Phi / N.
  ComplexMatrix choi_state() const;
  /// Kraus operators as supplied at construction, if any.
  const std::optional<KrausSet>& kraus() const { return data_->kraus; }
  const ChannelFlags& flags() const { return data_->flags; }
  const ChannelDefects& defects() const { return data_->defects; }

  /// Singular values of the superoperator (sigma_i), descending.
  const Spectrum& superoperator_singular_values() const { return data_->singular; }
  /// Eigenvalues of the symmetrized dynamical matrix, descending, signed.
  const Spectrum& choi_eigenvalues() const { return data_->choi_eigen; }
  /// Phi(1/N).
  const ComplexMatrix& output_of_maximally_mixed() const { return data_->output_mm; }

  const std::string& label() const { return label_; }
  /// Family name for channels built by the zoo ("interval", "depolarizing", ...).
  const std::string& family() const { return family_; }
  Channel relabeled(std::string label, std::string family = {}) const;

  friend Channel from_superoperator(const ComplexMatrix&, std::size_t, Validation);
  friend Channel from_kraus(const KrausSet&);

 private:
  struct Data {
    std::size_t dim = 0;
    ComplexMatrix superop;
    ComplexMatrix choi;
    std::optional<KrausSet> kraus;
    ChannelFlags flags;
    ChannelDefects defects;
    Spectrum singular;
    Spectrum choi_eigen;
    ComplexMatrix output_mm;
  };

  explicit Channel(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
  std::string label_;
  std::string family_;
};

/// Phi = sum_i A_i kron conj(A_i). Throws ValidationError on a TP violation.
Channel from_kraus(const KrausSet& kraus);

/// Validates CP and TP through the dynamical matrix unless `mode` is permissive.
Channel from_superoperator(const ComplexMatrix& m, std::size_t n,
                           Validation mode = Validation::strict);

/// Builds the channel whose dynamical matrix is `d` (N^2 x N^2).
Channel from_choi(const ComplexMatrix& d, std::size_t n, Validation mode = Validation::strict);

/// Canonical Kraus set from the eigendecomposition of D: A_i = sqrt(lambda_i)
/// unres(v_i), dropping eigenvalues at or below tol::kraus * lambda_1.
/// Operators inside degenerate eigenspaces are basis dependent.
KrausSet choi_to_kraus(const ComplexMatrix& d, std::size_t n);
KrausSet choi_to_kraus(const Channel& ch);

/// Throws ValidationError unless rho is an N x N density matrix.
void validate_state(const ComplexMatrix& rho, std::size_t n);

/// rho' = unvec(Phi vec(rho)).
ComplexMatrix apply(const Channel& ch, const ComplexMatrix& rho);

/// Phi(rho) = Tr_E[U (rho kron |0><0|) U^dag] for U acting on C^N kron C^d
/// (system index major). Kraus operators A_i = (1 kron <i|) U (1 kron |0>).
Channel from_environment(const ComplexMatrix& u, std::size_t n, std::size_t d);

/// A'_j = sum_i V_{ji} A_i for an isometry V (m x k, V^dag V = 1_k).
KrausSet remix_kraus(const KrausSet& kraus, const ComplexMatrix& v);

struct MaximallyMixedOutput {
  ComplexMatrix state;  // Phi(1/N)
  double tau1 = 0.0;    // its largest eigenvalue
};

MaximallyMixedOutput output_of_maximally_mixed(const Channel& ch);

}  // namespace qchan
