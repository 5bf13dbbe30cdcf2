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

#include "qchan/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qchan/errors.hpp"
#include "qchan/tolerances.hpp"

namespace qchan {

ProbabilityVector::ProbabilityVector(std::vector<double> weights) : weights_(std::move(weights)) {
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || w > 1.0 + 1e-12) {
      std::ostringstream os;
      os << "probability weight " << w << " outside [0, 1]";
      throw ValidationError(os.str());
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "probability weights sum to " << sum << ", expected 1";
    throw ValidationError(os.str());
  }
}

ProbabilityVector ProbabilityVector::from_spectrum(std::span<const double> values) {
  std::vector<double> w(values.begin(), values.end());
  double largest = 0.0;
  for (double v : w) {
    if (!(v >= 0.0)) throw ValidationError("spectrum has a negative or non-finite entry");
    largest = std::max(largest, v);
  }
  if (largest == 0.0) throw ValidationError("spectrum is identically zero");
  double sum = 0.0;
  for (double& v : w) {
    if (v <= tol::spectrum_zero * largest) v = 0.0;
    sum += v;
  }
  for (double& v : w) v /= sum;
  return ProbabilityVector(std::move(w), Unchecked{});
}

double renyi(const ProbabilityVector& p, RenyiOrder q) {
  if (!q.is_infinite() && !(q.value() >= 0.0)) {
    throw DomainError("Renyi order must be non-negative, got " + q.to_string());
  }
  const auto w = p.weights();
  if (q.is_infinite()) {
    return 0.0 - std::log(*std::max_element(w.begin(), w.end()));
  }
  const double order = q.value();
  if (std::abs(order - 1.0) < tol::shannon_window) {
    double h = 0.0;
    for (double x : w)
      if (x > 0.0) h -= x * std::log(x);
    return h;
  }
  double s = 0.0;
  for (double x : w)
    if (x > 0.0) s += std::pow(x, order);
  // 0.0 + avoids a signed zero for point masses.
  return 0.0 + std::log(s) / (1.0 - order);
}

double matrix_renyi(const ComplexMatrix& x, RenyiOrder q) {
  return renyi(ProbabilityVector::from_spectrum(singular_values(x).values), q);
}

double state_entropy(const ComplexMatrix& rho, RenyiOrder q) {
  Spectrum ev = hermitian_eigenvalues(rho);
  const double threshold = tol::psd * rho.norm();
  if (ev.smallest() < -threshold) {
    std::ostringstream os;
    os << "state_entropy: matrix has eigenvalue " << ev.smallest() << " below -" << threshold;
    throw ValidationError(os.str());
  }
  for (double& v : ev.values) v = std::max(v, 0.0);
  return renyi(ProbabilityVector::from_spectrum(ev.values), q);
}

ProbabilityVector map_spectrum(const Channel& ch) {
  std::vector<double> ev = ch.choi_eigenvalues().values;
  const auto& def = ch.defects();
  if (def.choi_hermiticity > tol::herm || def.choi_min_eigenvalue < -def.psd_threshold) {
    std::ostringstream os;
    os << "map entropy of a non-CP map (min eigenvalue of D " << def.choi_min_eigenvalue
       << ", Hermiticity defect " << def.choi_hermiticity << ")";
    throw ValidationError(os.str());
  }
  for (double& v : ev) v = std::max(v, 0.0);
  return ProbabilityVector::from_spectrum(ev);
}

ProbabilityVector receiver_spectrum(const Channel& ch) {
  return ProbabilityVector::from_spectrum(ch.superoperator_singular_values().values);
}

double map_entropy(const Channel& ch, RenyiOrder q) { return renyi(map_spectrum(ch), q); }

double receiver_entropy(const Channel& ch, RenyiOrder q) {
  return renyi(receiver_spectrum(ch), q);
}

double povm_entropy(const KrausSet& kraus, RenyiOrder q) {
  validate_kraus(kraus);
  const std::vector<double> kappa = kraus_weights(kraus);
  return renyi(ProbabilityVector::from_spectrum(kappa), q);
}

double exchange_entropy(const Channel& ch, const ComplexMatrix& rho) {
  validate_state(rho, ch.dim());
  const ComplexMatrix root = psd_sqrt(rho);
  // sum_a |res(A_a sqrt(rho))><res(A_a sqrt(rho))| = (Phi (sqrt(rho) kron conj(sqrt(rho))))^R
  const ComplexMatrix joint = reshuffle(ch.superoperator() * kron(root, root.conjugate()), ch.dim());
  return state_entropy(joint, RenyiOrder(1.0));
}

double output_entropy(const Channel& ch, RenyiOrder q) {
  return state_entropy(ch.output_of_maximally_mixed(), q);
}

std::array<double, 3> bloch_ellipsoid(const Channel& ch) {
  if (ch.dim() != 2) throw DomainError("bloch_ellipsoid requires a qubit channel (N = 2)");
  if (!ch.flags().unital) throw DomainError("bloch_ellipsoid requires a unital channel");
  const Complex i(0.0, 1.0);
  std::array<ComplexMatrix, 4> pauli;
  pauli[0] = ComplexMatrix::Identity(2, 2);
  pauli[1].resize(2, 2);
  pauli[1] << 0.0, 1.0, 1.0, 0.0;
  pauli[2].resize(2, 2);
  pauli[2] << 0.0, -i, i, 0.0;
  pauli[3].resize(2, 2);
  pauli[3] << 1.0, 0.0, 0.0, -1.0;
  ComplexMatrix basis(4, 4);
  for (Eigen::Index j = 0; j < 4; ++j) basis.col(j) = vec_rows(pauli[static_cast<std::size_t>(j)]) / std::sqrt(2.0);
  const ComplexMatrix t = basis.adjoint() * ch.superoperator() * basis;
  Spectrum sv = singular_values(t.block(1, 1, 3, 3));
  return {sv.values[2], sv.values[1], sv.values[0]};
}

EntropyPoint entropy_point(const Channel& ch, RenyiOrder q, bool with_extras) {
  EntropyPoint p;
  p.q = q;
  p.s_map = map_entropy(ch, q);
  p.s_rec = receiver_entropy(ch, q);
  p.channel_label = ch.label();
  if (with_extras) {
    EntropyExtras e;
    e.lambda_phi = ch.superoperator_singular_values().total;
    e.sigma1 = ch.superoperator_singular_values().largest();
    e.tau1 = output_of_maximally_mixed(ch).tau1;
    e.d1 = ch.choi_eigenvalues().largest();
    p.extras = e;
  }
  return p;
}

}  // namespace qchan
