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

#include "qchan/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qchan/errors.hpp"
#include "qchan/tolerances.hpp"

namespace qchan {

namespace {

ComplexMatrix identity(std::size_t n) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

void require_kraus_shapes(const KrausSet& kraus) {
  if (kraus.dim == 0) throw DimensionError("Kraus set has dimension 0");
  if (kraus.operators.empty()) throw ValidationError("Kraus set is empty");
  const auto n = static_cast<Eigen::Index>(kraus.dim);
  for (std::size_t i = 0; i < kraus.operators.size(); ++i) {
    const auto& a = kraus.operators[i];
    if (a.rows() != n || a.cols() != n) {
      std::ostringstream os;
      os << "Kraus operator " << i << " is " << a.rows() << "x" << a.cols() << ", expected " << n
         << "x" << n;
      throw DimensionError(os.str());
    }
    require_finite(a, "Kraus operator");
  }
}

}  // namespace

double kraus_tp_defect(const KrausSet& kraus) {
  require_kraus_shapes(kraus);
  ComplexMatrix sum = ComplexMatrix::Zero(static_cast<Eigen::Index>(kraus.dim),
                                          static_cast<Eigen::Index>(kraus.dim));
  for (const auto& a : kraus.operators) sum += a.adjoint() * a;
  return (sum - identity(kraus.dim)).norm();
}

void validate_kraus(const KrausSet& kraus) {
  const double defect = kraus_tp_defect(kraus);
  if (defect > tol::tp) {
    std::ostringstream os;
    os << "Kraus set is not trace preserving: ||sum A^dag A - 1||_2 = " << defect << " > "
       << tol::tp;
    throw ValidationError(os.str());
  }
}

std::vector<double> kraus_weights(const KrausSet& kraus) {
  std::vector<double> w;
  w.reserve(kraus.operators.size());
  for (const auto& a : kraus.operators) w.push_back(a.squaredNorm());
  return w;
}

Channel::Channel(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

ComplexMatrix Channel::choi_state() const { return data_->choi / static_cast<double>(dim()); }

Channel Channel::relabeled(std::string label, std::string family) const {
  Channel out(*this);
  out.label_ = std::move(label);
  if (!family.empty()) out.family_ = std::move(family);
  return out;
}

Channel from_superoperator(const ComplexMatrix& m, std::size_t n, Validation mode) {
  if (n == 0) throw DimensionError("channel dimension must be positive");
  require_finite(m, "superoperator");
  auto data = std::make_shared<Channel::Data>();
  data->dim = n;
  data->superop = m;
  data->choi = reshuffle(m, n);

  auto& def = data->defects;
  const ComplexMatrix& d = data->choi;
  def.choi_hermiticity = hermiticity_defect(d);
  const ComplexMatrix sym = (d + d.adjoint()) * 0.5;
  data->choi_eigen = hermitian_eigenvalues(sym);
  def.choi_min_eigenvalue = data->choi_eigen.smallest();
  def.psd_threshold = tol::psd * d.norm();
  def.tp = (partial_trace_first(d, n, n) - identity(n)).norm();

  const ComplexMatrix mixed = identity(n) / static_cast<double>(n);
  data->output_mm = unvec_rows(m * vec_rows(mixed), n, n);
  def.unital = (data->output_mm - mixed).norm();

  auto& flags = data->flags;
  flags.cp = def.choi_hermiticity <= tol::herm && def.choi_min_eigenvalue >= -def.psd_threshold;
  flags.tp = def.tp <= tol::tp;
  flags.unital = def.unital <= tol::unital;

  if (mode == Validation::strict) {
    if (def.choi_hermiticity > tol::herm) {
      std::ostringstream os;
      os << "map is not completely positive: dynamical matrix is not Hermitian (relative defect "
         << def.choi_hermiticity << ")";
      throw ValidationError(os.str());
    }
    if (!flags.cp) {
      std::ostringstream os;
      os << "map is not completely positive: min eigenvalue of D is " << def.choi_min_eigenvalue
         << " < -" << def.psd_threshold;
      throw ValidationError(os.str());
    }
    if (!flags.tp) {
      std::ostringstream os;
      os << "map is not trace preserving: ||Tr_A D - 1||_2 = " << def.tp << " > " << tol::tp;
      throw ValidationError(os.str());
    }
  }
  data->singular = singular_values(m);
  return Channel(std::move(data));
}

Channel from_kraus(const KrausSet& kraus) {
  validate_kraus(kraus);
  const auto n = kraus.dim;
  const auto n2 = static_cast<Eigen::Index>(n * n);
  ComplexMatrix superop = ComplexMatrix::Zero(n2, n2);
  ComplexMatrix choi = ComplexMatrix::Zero(n2, n2);
  for (const auto& a : kraus.operators) {
    superop += kron(a, a.conjugate());
    const ComplexVector r = vec_rows(a);
    choi += r * r.adjoint();
  }
  Channel ch = from_superoperator(superop, n, Validation::strict);
  const double mismatch = (choi - ch.choi()).norm();
  if (mismatch > 1e-12 * std::max(1.0, choi.norm())) {
    std::ostringstream os;
    os << "from_kraus: outer-product and reshuffled dynamical matrices differ by " << mismatch;
    throw NumericalError(os.str());
  }
  auto data = std::make_shared<Channel::Data>(*ch.data_);
  data->kraus = kraus;
  return Channel(std::move(data));
}

Channel from_choi(const ComplexMatrix& d, std::size_t n, Validation mode) {
  return from_superoperator(reshuffle(d, n), n, mode);
}

KrausSet choi_to_kraus(const ComplexMatrix& d, std::size_t n) {
  const std::size_t found = require_square_of_square(d, "choi_to_kraus");
  if (found != n) throw DimensionError("choi_to_kraus: dynamical matrix is not N^2 x N^2");
  const HermitianEigensystem es = hermitian_eigensystem(d);
  const double threshold = tol::psd * d.norm();
  if (!es.values.empty() && es.values.back() < -threshold) {
    std::ostringstream os;
    os << "choi_to_kraus: dynamical matrix is not positive (min eigenvalue " << es.values.back()
       << ")";
    throw ValidationError(os.str());
  }
  KrausSet out;
  out.dim = n;
  const double lambda1 = es.values.empty() ? 0.0 : es.values.front();
  for (std::size_t i = 0; i < es.values.size(); ++i) {
    const double lambda = es.values[i];
    if (lambda <= tol::kraus * lambda1) break;
    const ComplexVector v = es.vectors.col(static_cast<Eigen::Index>(i)) * std::sqrt(lambda);
    out.operators.push_back(unvec_rows(v, n, n));
  }
  return out;
}

KrausSet choi_to_kraus(const Channel& ch) { return choi_to_kraus(ch.choi(), ch.dim()); }

void validate_state(const ComplexMatrix& rho, std::size_t n) {
  const auto N = static_cast<Eigen::Index>(n);
  if (rho.rows() != N || rho.cols() != N) {
    std::ostringstream os;
    os << "state is " << rho.rows() << "x" << rho.cols() << ", expected " << n << "x" << n;
    throw ValidationError(os.str());
  }
  require_finite(rho, "state");
  const double herm = hermiticity_defect(rho);
  if (herm > tol::herm) {
    std::ostringstream os;
    os << "state is not Hermitian (relative defect " << herm << ")";
    throw ValidationError(os.str());
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::trace) {
    std::ostringstream os;
    os << "state trace is " << tr.real() << (tr.imag() >= 0 ? "+" : "") << tr.imag()
       << "i, expected 1";
    throw ValidationError(os.str());
  }
  const Spectrum ev = hermitian_eigenvalues(rho);
  if (ev.smallest() < -tol::psd * rho.norm()) {
    std::ostringstream os;
    os << "state is not positive semidefinite (min eigenvalue " << ev.smallest() << ")";
    throw ValidationError(os.str());
  }
}

ComplexMatrix apply(const Channel& ch, const ComplexMatrix& rho) {
  validate_state(rho, ch.dim());
  return unvec_rows(ch.superoperator() * vec_rows(rho), ch.dim(), ch.dim());
}

Channel from_environment(const ComplexMatrix& u, std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) throw DimensionError("from_environment: dimensions must be positive");
  const auto size = static_cast<Eigen::Index>(n * d);
  if (u.rows() != size || u.cols() != size) {
    std::ostringstream os;
    os << "from_environment: U is " << u.rows() << "x" << u.cols() << ", expected " << size << "x"
       << size;
    throw DimensionError(os.str());
  }
  require_finite(u, "from_environment");
  const double defect = (u.adjoint() * u - ComplexMatrix::Identity(size, size)).norm();
  if (defect > tol::unitary) {
    std::ostringstream os;
    os << "from_environment: U is not unitary (||U^dag U - 1||_2 = " << defect << ")";
    throw ValidationError(os.str());
  }
  const auto N = static_cast<Eigen::Index>(n);
  const auto D = static_cast<Eigen::Index>(d);
  KrausSet kraus;
  kraus.dim = n;
  for (Eigen::Index i = 0; i < D; ++i) {
    ComplexMatrix a(N, N);
    for (Eigen::Index s = 0; s < N; ++s)
      for (Eigen::Index t = 0; t < N; ++t) a(s, t) = u(s * D + i, t * D);
    kraus.operators.push_back(std::move(a));
  }
  return from_kraus(kraus);
}

KrausSet remix_kraus(const KrausSet& kraus, const ComplexMatrix& v) {
  require_kraus_shapes(kraus);
  const auto k = static_cast<Eigen::Index>(kraus.operators.size());
  if (v.cols() != k || v.rows() < k) {
    std::ostringstream os;
    os << "remix_kraus: V is " << v.rows() << "x" << v.cols() << ", expected m x " << k
       << " with m >= " << k;
    throw DimensionError(os.str());
  }
  require_finite(v, "remix_kraus");
  const double defect = (v.adjoint() * v - ComplexMatrix::Identity(k, k)).norm();
  if (defect > tol::unitary) {
    std::ostringstream os;
    os << "remix_kraus: V is not an isometry (||V^dag V - 1||_2 = " << defect << ")";
    throw ValidationError(os.str());
  }
  KrausSet out;
  out.dim = kraus.dim;
  const auto N = static_cast<Eigen::Index>(kraus.dim);
  for (Eigen::Index j = 0; j < v.rows(); ++j) {
    ComplexMatrix a = ComplexMatrix::Zero(N, N);
    for (Eigen::Index i = 0; i < k; ++i) a += v(j, i) * kraus.operators[static_cast<std::size_t>(i)];
    out.operators.push_back(std::move(a));
  }
  return out;
}

MaximallyMixedOutput output_of_maximally_mixed(const Channel& ch) {
  MaximallyMixedOutput out;
  out.state = ch.output_of_maximally_mixed();
  out.tau1 = hermitian_eigenvalues(out.state).largest();
  return out;
}

}  // namespace qchan
