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

#include "qchan/matcore.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qchan/errors.hpp"
#include "qchan/tolerances.hpp"

namespace qchan {

std::string RenyiOrder::to_string() const {
  if (infinite_) return "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, res.ptr);
}

RenyiOrder parse_renyi_order(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (t == "inf" || t == "infinity" || t == "\xe2\x88\x9e") return RenyiOrder::infinity();
  double q = 0.0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), q);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(q)) {
    throw ParseError("invalid Renyi order '" + text + "'");
  }
  if (q < 0.0) throw DomainError("Renyi order must be non-negative, got '" + text + "'");
  return RenyiOrder(q);
}

Spectrum Spectrum::from_unsorted(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum s;
  s.total = std::accumulate(values.begin(), values.end(), 0.0);
  s.values = std::move(values);
  return s;
}

PermutationMap::PermutationMap(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> hit(mapping_.size(), false);
  for (std::size_t target : mapping_) {
    if (target >= mapping_.size() || hit[target]) {
      throw ValidationError("permutation map is not a bijection on 0.." +
                            std::to_string(mapping_.size()));
    }
    hit[target] = true;
  }
}

PermutationMap PermutationMap::identity(std::size_t size) {
  std::vector<std::size_t> m(size);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return PermutationMap(std::move(m));
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw ValidationError(std::string(what) + ": matrix has non-finite entries");
}

std::size_t require_square_of_square(const ComplexMatrix& m, const char* what) {
  require_square(m, what);
  const auto size = static_cast<std::size_t>(m.rows());
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(size))));
  if (n * n != size || n == 0) {
    std::ostringstream os;
    os << what << ": size " << size << " is not a perfect square";
    throw DimensionError(os.str());
  }
  return n;
}

ComplexMatrix reshuffle(const ComplexMatrix& m, std::size_t n) {
  const std::size_t found = require_square_of_square(m, "reshuffle");
  if (found != n) {
    std::ostringstream os;
    os << "reshuffle: matrix is " << m.rows() << "x" << m.cols() << ", expected N^2 = " << n * n;
    throw DimensionError(os.str());
  }
  const auto N = static_cast<Eigen::Index>(n);
  ComplexMatrix out(N * N, N * N);
  for (Eigen::Index k = 0; k < N; ++k)
    for (Eigen::Index l = 0; l < N; ++l)
      for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index j = 0; j < N; ++j) out(k * N + i, l * N + j) = m(k * N + l, i * N + j);
  return out;
}

PermutationMap reshuffle_permutation(std::size_t n) {
  const std::size_t n2 = n * n;
  std::vector<std::size_t> map(n2 * n2);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t out_index = (k * n + i) * n2 + (l * n + j);
          const std::size_t in_index = (k * n + l) * n2 + (i * n + j);
          map[out_index] = in_index;
        }
  return PermutationMap(std::move(map));
}

ComplexMatrix reorder(const ComplexMatrix& m, const PermutationMap& perm) {
  const auto cols = static_cast<std::size_t>(m.cols());
  const auto count = static_cast<std::size_t>(m.size());
  if (perm.size() != count) {
    std::ostringstream os;
    os << "reorder: permutation of size " << perm.size() << " for a matrix with " << count
       << " entries";
    throw DimensionError(os.str());
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t src = perm[j];
    out(static_cast<Eigen::Index>(j / cols), static_cast<Eigen::Index>(j % cols)) =
        m(static_cast<Eigen::Index>(src / cols), static_cast<Eigen::Index>(src % cols));
  }
  return out;
}

Spectrum singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  if (m.size() == 0) return {};
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();
  if (!sv.allFinite()) {
    std::ostringstream os;
    os << "singular_values: decomposition of a " << m.rows() << "x" << m.cols()
       << " matrix did not converge";
    throw NumericalError(os.str());
  }
  std::vector<double> v(sv.data(), sv.data() + sv.size());
  for (double& x : v) x = std::max(x, 0.0);
  return Spectrum::from_unsorted(std::move(v));
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

double hermiticity_defect(const ComplexMatrix& h) {
  const double scale = h.norm();
  if (scale == 0.0) return 0.0;
  return (h - h.adjoint()).norm() / scale;
}

namespace {

ComplexMatrix checked_symmetrize(const ComplexMatrix& h, const char* what) {
  require_square(h, what);
  require_finite(h, what);
  const double defect = hermiticity_defect(h);
  if (defect > tol::herm) {
    std::ostringstream os;
    os << what << ": matrix is not Hermitian (relative defect " << defect << " > " << tol::herm
       << ")";
    throw ValidationError(os.str());
  }
  return (h + h.adjoint()) * 0.5;
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h) {
  const ComplexMatrix sym = checked_symmetrize(h, "hermitian_eigensystem");
  HermitianEigensystem out;
  if (sym.size() == 0) return out;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigensystem: eigendecomposition did not converge");
  }
  // Eigen sorts ascending; flip to descending.
  const Eigen::Index n = sym.rows();
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& h) {
  const ComplexMatrix sym = checked_symmetrize(h, "hermitian_eigenvalues");
  if (sym.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigenvalues: eigendecomposition did not converge");
  }
  const Eigen::VectorXd ev = solver.eigenvalues();
  return Spectrum::from_unsorted(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

double vector_q_norm(std::span<const double> x, RenyiOrder q) {
  if (!q.is_infinite() && !(q.value() >= 1.0)) {
    throw DomainError("q-norm requires q >= 1, got " + q.to_string());
  }
  if (q.is_infinite()) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  const double p = q.value();
  if (p == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
  }
  // Scale by the max entry to avoid overflow for large q.
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double q_norm(const Spectrum& singular, RenyiOrder q) {
  return vector_q_norm(singular.values, q);
}

double q_norm(const ComplexMatrix& m, RenyiOrder q) {
  if (!q.is_infinite() && !(q.value() >= 1.0)) {
    throw DomainError("q-norm requires q >= 1, got " + q.to_string());
  }
  return q_norm(singular_values(m), q);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector vec_rows(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

ComplexMatrix unvec_rows(const ComplexVector& v, std::size_t rows, std::size_t cols) {
  if (static_cast<std::size_t>(v.size()) != rows * cols) {
    throw DimensionError("unvec_rows: vector length does not match rows*cols");
  }
  const auto R = static_cast<Eigen::Index>(rows);
  const auto C = static_cast<Eigen::Index>(cols);
  ComplexMatrix m(R, C);
  for (Eigen::Index i = 0; i < R; ++i)
    for (Eigen::Index j = 0; j < C; ++j) m(i, j) = v(i * C + j);
  return m;
}

namespace {

void require_bipartite(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                       const char* what) {
  require_square(m, what);
  if (static_cast<std::size_t>(m.rows()) != dim_a * dim_b) {
    std::ostringstream os;
    os << what << ": matrix of size " << m.rows() << " does not factor as " << dim_a << "x"
       << dim_b;
    throw DimensionError(os.str());
  }
}

}  // namespace

ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  require_bipartite(m, dim_a, dim_b, "partial_trace_first");
  const auto A = static_cast<Eigen::Index>(dim_a);
  const auto B = static_cast<Eigen::Index>(dim_b);
  ComplexMatrix out = ComplexMatrix::Zero(B, B);
  for (Eigen::Index k = 0; k < A; ++k)
    for (Eigen::Index i = 0; i < B; ++i)
      for (Eigen::Index j = 0; j < B; ++j) out(i, j) += m(k * B + i, k * B + j);
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  require_bipartite(m, dim_a, dim_b, "partial_trace_second");
  const auto A = static_cast<Eigen::Index>(dim_a);
  const auto B = static_cast<Eigen::Index>(dim_b);
  ComplexMatrix out = ComplexMatrix::Zero(A, A);
  for (Eigen::Index i = 0; i < A; ++i)
    for (Eigen::Index j = 0; j < A; ++j)
      for (Eigen::Index k = 0; k < B; ++k) out(i, j) += m(i * B + k, j * B + k);
  return out;
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& m, std::size_t dim_a,
                                       std::size_t dim_b) {
  require_bipartite(m, dim_a, dim_b, "partial_transpose_second");
  const auto A = static_cast<Eigen::Index>(dim_a);
  const auto B = static_cast<Eigen::Index>(dim_b);
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index k = 0; k < A; ++k)
    for (Eigen::Index i = 0; i < B; ++i)
      for (Eigen::Index l = 0; l < A; ++l)
        for (Eigen::Index j = 0; j < B; ++j) out(k * B + i, l * B + j) = m(k * B + j, l * B + i);
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  const HermitianEigensystem es = hermitian_eigensystem(h);
  Eigen::VectorXd roots(static_cast<Eigen::Index>(es.values.size()));
  for (std::size_t i = 0; i < es.values.size(); ++i) {
    roots(static_cast<Eigen::Index>(i)) = std::sqrt(std::max(es.values[i], 0.0));
  }
  return es.vectors * roots.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

std::size_t count_above(const Spectrum& s, double cutoff) {
  return static_cast<std::size_t>(
      std::count_if(s.values.begin(), s.values.end(), [cutoff](double v) { return v > cutoff; }));
}

}  // namespace qchan
