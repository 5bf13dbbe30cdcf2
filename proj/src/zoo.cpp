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

#include "qchan/zoo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/QR>

#include "qchan/errors.hpp"
#include "qchan/tolerances.hpp"

namespace qchan {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

void require_dim(std::size_t n, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + ": dimension must be at least 2");
}

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << x << " outside [0, 1]";
    throw DomainError(os.str());
  }
}

std::array<ComplexMatrix, 4> pauli_matrices() {
  const Complex i(0.0, 1.0);
  std::array<ComplexMatrix, 4> s;
  s[0] = ComplexMatrix::Identity(2, 2);
  s[1].resize(2, 2);
  s[1] << 0.0, 1.0, 1.0, 0.0;
  s[2].resize(2, 2);
  s[2] << 0.0, -i, i, 0.0;
  s[3].resize(2, 2);
  s[3] << 1.0, 0.0, 0.0, -1.0;
  return s;
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, RngStream& rng) {
  ComplexMatrix g(idx(rows), idx(cols));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.complex_normal();
  return g;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "identity",    "depolarizing", "coarse_graining", "complete_contraction",
      "spontaneous_emission", "interval", "pauli", "reshuffle_invariant",
      "random_cptp", "random_bistochastic"};
  return names;
}

Channel identity_channel(std::size_t n) {
  require_dim(n, "identity_channel");
  return from_superoperator(ComplexMatrix::Identity(idx(n * n), idx(n * n)), n)
      .relabeled("identity", "identity");
}

Channel completely_depolarizing(std::size_t n) {
  require_dim(n, "completely_depolarizing");
  const ComplexVector one = vec_rows(ComplexMatrix::Identity(idx(n), idx(n)));
  const ComplexMatrix superop = one * one.transpose() / static_cast<double>(n);
  return from_superoperator(superop, n).relabeled("depolarizing:alpha=0", "depolarizing");
}

Channel depolarizing(std::size_t n, double alpha) {
  require_dim(n, "depolarizing");
  require_unit_interval(alpha, "depolarizing alpha");
  const ComplexVector one = vec_rows(ComplexMatrix::Identity(idx(n), idx(n)));
  const ComplexMatrix superop = alpha * ComplexMatrix::Identity(idx(n * n), idx(n * n)) +
                                (1.0 - alpha) * (one * one.transpose()) / static_cast<double>(n);
  std::ostringstream label;
  label << "depolarizing:alpha=" << alpha;
  return from_superoperator(superop, n).relabeled(label.str(), "depolarizing");
}

Channel coarse_graining(std::size_t n) {
  require_dim(n, "coarse_graining");
  ComplexMatrix superop = ComplexMatrix::Zero(idx(n * n), idx(n * n));
  for (std::size_t k = 0; k < n; ++k) superop(idx(k * n + k), idx(k * n + k)) = 1.0;
  return from_superoperator(superop, n).relabeled("coarse_graining", "coarse_graining");
}

Channel complete_contraction(const ComplexMatrix& xi) {
  require_square(xi, "complete_contraction");
  const auto n = static_cast<std::size_t>(xi.rows());
  require_dim(n, "complete_contraction");
  validate_state(xi, n);
  const ComplexVector one = vec_rows(ComplexMatrix::Identity(idx(n), idx(n)));
  const ComplexMatrix superop = vec_rows(xi) * one.transpose();
  return from_superoperator(superop, n).relabeled("complete_contraction", "complete_contraction");
}

Channel spontaneous_emission(std::size_t n) {
  require_dim(n, "spontaneous_emission");
  ComplexMatrix ground = ComplexMatrix::Zero(idx(n), idx(n));
  ground(0, 0) = 1.0;
  return complete_contraction(ground).relabeled("spontaneous_emission", "spontaneous_emission");
}

Channel interval_channel_general(double alpha, double beta, Complex gamma1, Complex gamma2) {
  require_unit_interval(alpha, "interval alpha");
  require_unit_interval(beta, "interval beta");
  ComplexMatrix superop = ComplexMatrix::Zero(4, 4);
  superop(0, 0) = alpha;
  superop(1, 0) = gamma1;
  superop(2, 0) = std::conj(gamma1);
  superop(3, 0) = 1.0 - alpha;
  superop(0, 3) = beta;
  superop(1, 3) = gamma2;
  superop(2, 3) = std::conj(gamma2);
  superop(3, 3) = 1.0 - beta;
  std::ostringstream label;
  label << "interval:alpha=" << alpha << ";beta=" << beta;
  return from_superoperator(superop, 2).relabeled(label.str(), "interval");
}

Channel interval_channel(double alpha, double beta, double phi1, double phi2) {
  require_unit_interval(alpha, "interval alpha");
  require_unit_interval(beta, "interval beta");
  const Complex g1 = std::sqrt(alpha * (1.0 - alpha)) * std::polar(1.0, phi1);
  const Complex g2 = std::sqrt(beta * (1.0 - beta)) * std::polar(1.0, phi2);
  return interval_channel_general(alpha, beta, g1, g2);
}

Channel interval_channel_from_states(const ComplexMatrix& rho1, const ComplexMatrix& rho2) {
  validate_state(rho1, 2);
  validate_state(rho2, 2);
  return interval_channel_general(rho1(0, 0).real(), rho2(0, 0).real(), rho1(0, 1), rho2(0, 1));
}

Channel pauli_channel(const ProbabilityVector& p) {
  if (p.size() != 4) throw DimensionError("pauli_channel needs four probabilities");
  const auto sigma = pauli_matrices();
  KrausSet kraus;
  kraus.dim = 2;
  std::ostringstream label;
  label << "pauli:";
  for (std::size_t i = 0; i < 4; ++i) {
    kraus.operators.push_back(std::sqrt(p.weights()[i]) * sigma[i]);
    label << (i ? ";" : "") << "p" << i << "=" << p.weights()[i];
  }
  return from_kraus(kraus).relabeled(label.str(), "pauli");
}

ComplexMatrix reshuffle_invariant_core(const std::array<double, 3>& eta) {
  const double e1 = eta[0], e2 = eta[1], e3 = eta[2];
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  // The (3,3) entry is (1 + eta3)/2 so that the map is trace preserving.
  m(0, 0) = 0.5 * (1.0 + e3);
  m(0, 3) = 0.5 * (1.0 - e3);
  m(1, 1) = 0.5 * (e1 + e2);
  m(1, 2) = 0.5 * (e1 - e2);
  m(2, 1) = 0.5 * (e1 - e2);
  m(2, 2) = 0.5 * (e1 + e2);
  m(3, 0) = 0.5 * (1.0 - e3);
  m(3, 3) = 0.5 * (1.0 + e3);
  return m;
}

Channel reshuffle_invariant(const std::array<double, 3>& eta, const ComplexMatrix& u) {
  std::ostringstream tag;
  tag << "eta=(" << eta[0] << "," << eta[1] << "," << eta[2] << ")";
  for (double e : eta) {
    if (!(e >= 0.0)) throw DomainError("reshuffle_invariant: negative component in " + tag.str());
  }
  if (std::abs(eta[0] + eta[1] + eta[2] - 1.0) > 1e-12) {
    throw DomainError("reshuffle_invariant: components of " + tag.str() + " do not sum to 1");
  }
  if (u.rows() != 2 || u.cols() != 2) throw DimensionError("reshuffle_invariant: U must be 2x2");
  if ((u.adjoint() * u - ComplexMatrix::Identity(2, 2)).norm() > tol::unitary) {
    throw ValidationError("reshuffle_invariant: U is not unitary");
  }
  const ComplexMatrix left = kron(u, u.conjugate());
  const ComplexMatrix right = kron(u.adjoint(), u.transpose());
  const ComplexMatrix superop = left * reshuffle_invariant_core(eta) * right;
  try {
    std::ostringstream label;
    label << "reshuffle_invariant:eta1=" << eta[0] << ";eta2=" << eta[1] << ";eta3=" << eta[2];
    return from_superoperator(superop, 2).relabeled(label.str(), "reshuffle_invariant");
  } catch (const ValidationError& e) {
    throw ValidationError("reshuffle_invariant " + tag.str() + ": " + e.what());
  }
}

CurvePoint curve_ab_point(double alpha) {
  require_unit_interval(alpha, "curve ab alpha");
  CurvePoint p;
  const double a3 = 3.0 * alpha;
  p.s_rec = std::log1p(a3) - (alpha > 0.0 ? a3 * std::log(alpha) / (1.0 + a3) : 0.0);
  const double big = (1.0 + a3) / 4.0;
  const double small = (1.0 - alpha) / 4.0;
  p.s_map = renyi(ProbabilityVector({big, small, small, small}), RenyiOrder(1.0));
  return p;
}

ComplexMatrix haar_unitary(std::size_t n, RngStream& rng) {
  if (n == 0) throw DomainError("haar_unitary: n must be positive");
  const ComplexMatrix z = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  const ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  ComplexMatrix u = q;
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) u.col(j) *= d / mag;
  }
  return u;
}

ComplexMatrix haar_isometry(std::size_t m, std::size_t k, RngStream& rng) {
  if (k > m) throw DimensionError("haar_isometry: k must not exceed m");
  return haar_unitary(m, rng).leftCols(idx(k));
}

ComplexMatrix random_density(std::size_t n, RngStream& rng) {
  if (n == 0) throw DomainError("random_density: n must be positive");
  const ComplexMatrix g = ginibre(n, n, rng);
  const ComplexMatrix w = g * g.adjoint();
  ComplexMatrix rho = w / w.trace().real();
  return (rho + rho.adjoint()) * 0.5;
}

ComplexMatrix random_pure_state(std::size_t n, RngStream& rng) {
  ComplexVector psi(idx(n));
  for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = rng.complex_normal();
  psi.normalize();
  return psi * psi.adjoint();
}

std::vector<double> random_simplex_point(std::size_t k, RngStream& rng) {
  std::vector<double> w(k);
  double sum = 0.0;
  for (double& x : w) {
    x = -std::log1p(-rng.uniform());
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

Channel random_cptp(std::size_t n, std::size_t env_dim, RngStream& rng) {
  require_dim(n, "random_cptp");
  if (env_dim < 1 || env_dim > n * n) {
    std::ostringstream os;
    os << "random_cptp: environment dimension " << env_dim << " outside [1, " << n * n << "]";
    throw DomainError(os.str());
  }
  std::ostringstream label;
  label << "random_cptp:d=" << env_dim;
  return from_environment(haar_unitary(n * env_dim, rng), n, env_dim)
      .relabeled(label.str(), "random_cptp");
}

Channel random_bistochastic(std::size_t n, std::size_t k, RngStream& rng) {
  require_dim(n, "random_bistochastic");
  if (k < 1) throw DomainError("random_bistochastic: k must be at least 1");
  const std::vector<double> w = random_simplex_point(k, rng);
  KrausSet kraus;
  kraus.dim = n;
  for (std::size_t j = 0; j < k; ++j) kraus.operators.push_back(std::sqrt(w[j]) * haar_unitary(n, rng));
  std::ostringstream label;
  label << "random_bistochastic:k=" << k;
  return from_kraus(kraus).relabeled(label.str(), "random_bistochastic");
}

Channel random_pauli_channel(RngStream& rng) {
  return pauli_channel(ProbabilityVector::from_spectrum(random_simplex_point(4, rng)));
}

Channel random_interval_channel(RngStream& rng) {
  if (rng.uniform() < 0.5) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double alpha = rng.uniform();
    const double beta = rng.uniform();
    const double phi1 = two_pi * rng.uniform();
    const double phi2 = two_pi * rng.uniform();
    return interval_channel(alpha, beta, phi1, phi2);
  }
  const ComplexMatrix rho1 = random_density(2, rng);
  const ComplexMatrix rho2 = random_density(2, rng);
  return interval_channel_from_states(rho1, rho2);
}

Channel random_reshuffle_invariant(RngStream& rng) {
  const std::vector<double> w = random_simplex_point(3, rng);
  const ComplexMatrix u = haar_unitary(2, rng);
  return reshuffle_invariant({w[0], w[1], w[2]}, u);
}

}  // namespace qchan
