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

// Named channel families and random ensembles.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qchan/channels.hpp"
#include "qchan/entropy.hpp"
#include "qchan/rng.hpp"

namespace qchan {

/// Frozen family names accepted in channel specs.
const std::vector<std::string>& family_names();

Channel identity_channel(std::size_t n);
/// Phi_*(rho) = Tr(rho) 1/N.
Channel completely_depolarizing(std::size_t n);
/// alpha * identity + (1 - alpha) * Phi_*, alpha in [0, 1].
Channel depolarizing(std::size_t n, double alpha);
/// Keeps the diagonal of rho and zeroes every coherence.
Channel coarse_graining(std::size_t n);
/// Phi(rho) = Tr(rho) xi; its dynamical matrix is xi kron 1.
Channel complete_contraction(const ComplexMatrix& xi);
/// Complete contraction onto |0><0|.
Channel spontaneous_emission(std::size_t n = 2);

/// Qubit interval channel whose superoperator has first column vec(rho1)
/// and last column vec(rho2), with
///   rho1 = [[alpha, g1], [conj(g1), 1 - alpha]],
///   rho2 = [[beta,  g2], [conj(g2), 1 - beta]].
/// Throws DomainError for alpha, beta outside [0, 1] and ValidationError
/// when rho1 or rho2 is not positive.
Channel interval_channel_general(double alpha, double beta, Complex gamma1, Complex gamma2);
/// Pure endpoints: g1 = sqrt(alpha(1-alpha)) e^{i phi1}, g2 likewise.
Channel interval_channel(double alpha, double beta, double phi1, double phi2);
/// Interval channel between two arbitrary qubit states.
Channel interval_channel_from_states(const ComplexMatrix& rho1, const ComplexMatrix& rho2);

/// Phi(rho) = sum_i p_i sigma_i rho sigma_i with sigma_0 = 1.
Channel pauli_channel(const ProbabilityVector& p);

/// The 4x4 reshuffle-invariant core with semi-axes (eta1, eta2, eta3).
ComplexMatrix reshuffle_invariant_core(const std::array<double, 3>& eta);
/// (U kron conj U) core (U^dag kron U^T); eta on the probability simplex.
Channel reshuffle_invariant(const std::array<double, 3>& eta, const ComplexMatrix& u);

struct CurvePoint {
  double s_map = 0.0;
  double s_rec = 0.0;
};

/// Von Neumann (map, receiver) entropies of depolarizing(2, alpha): the
/// receiver entropy from its closed form ln(1+3a) - 3a ln(a)/(1+3a), the map
/// entropy from the Choi spectrum ((1+3a)/4, (1-a)/4 x3).
CurvePoint curve_ab_point(double alpha);

/// Haar unitary from the QR decomposition of a Ginibre matrix with the
/// phases of R's diagonal divided out.
ComplexMatrix haar_unitary(std::size_t n, RngStream& rng);
/// First k columns of a Haar unitary of size m.
ComplexMatrix haar_isometry(std::size_t m, std::size_t k, RngStream& rng);
/// Hilbert-Schmidt random state G G^dag / Tr G G^dag.
ComplexMatrix random_density(std::size_t n, RngStream& rng);
ComplexMatrix random_pure_state(std::size_t n, RngStream& rng);
/// Dirichlet(1, ..., 1): uniform on the probability simplex.
std::vector<double> random_simplex_point(std::size_t k, RngStream& rng);

/// from_environment(haar_unitary(N d), N, d), 1 <= d <= N^2.
Channel random_cptp(std::size_t n, std::size_t env_dim, RngStream& rng);
/// sum_j w_j U_j rho U_j^dag with Haar U_j and Dirichlet weights.
Channel random_bistochastic(std::size_t n, std::size_t k, RngStream& rng);
Channel random_pauli_channel(RngStream& rng);
Channel random_interval_channel(RngStream& rng);
Channel random_reshuffle_invariant(RngStream& rng);

}  // namespace qchan
