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

// Dense complex-matrix primitives: spectra, Schatten q-norms and the
// entry-reordering operations (reshuffle and arbitrary permutations).
//
// Composite indices are zero-based and row-major: (a, b) -> a * N + b. A
// matrix is vectorized by concatenating its rows, so vec(A rho B) equals
// (A kron B^T) vec(rho).

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qchan {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Renyi / Schatten order. Infinity is an explicit state, never a large
/// float, so min-entropy and operator-norm semantics are exact.
class RenyiOrder {
 public:
  constexpr RenyiOrder(double q)  // NOLINT(google-explicit-constructor)
      : value_(q), infinite_(q > std::numeric_limits<double>::max()) {}

  static constexpr RenyiOrder infinity() {
    return RenyiOrder(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr double value() const { return value_; }
  std::string to_string() const;

  friend constexpr bool operator==(RenyiOrder a, RenyiOrder b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  double value_;
  bool infinite_;
};

/// Parses "inf", "infinity", "∞" or a decimal number.
RenyiOrder parse_renyi_order(const std::string& text);

/// Non-negative reals sorted descending, with their sum. The signed variant
/// returned by hermitian_eigenvalues may hold negative entries.
struct Spectrum {
  std::vector<double> values;
  double total = 0.0;

  static Spectrum from_unsorted(std::vector<double> values);

  std::size_t size() const { return values.size(); }
  double largest() const { return values.empty() ? 0.0 : values.front(); }
  double smallest() const { return values.empty() ? 0.0 : values.back(); }
};

/// Bijection on the entry indices 0..size-1 of a matrix.
class PermutationMap {
 public:
  /// Throws ValidationError unless `mapping` is a bijection.
  explicit PermutationMap(std::vector<std::size_t> mapping);

  static PermutationMap identity(std::size_t size);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator[](std::size_t j) const { return mapping_[j]; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

 private:
  std::vector<std::size_t> mapping_;
};

/// (M^R)_{(k,m),(l,n)} = M_{(k,l),(m,n)}. M must be N^2 x N^2.
ComplexMatrix reshuffle(const ComplexMatrix& m, std::size_t n);

/// The reshuffle of an N^2 x N^2 matrix expressed as an entry permutation.
PermutationMap reshuffle_permutation(std::size_t n);

/// Entry j (row-major) of the result is entry perm[j] of m. Shape is kept.
ComplexMatrix reorder(const ComplexMatrix& m, const PermutationMap& perm);

Spectrum singular_values(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, descending, possibly negative. The input
/// is symmetrized as (H + H^dag)/2 after passing the Hermiticity check.
Spectrum hermitian_eigenvalues(const ComplexMatrix& h);

struct HermitianEigensystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column i belongs to values[i]
};

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h);

/// Schatten q-norm (sum_i x_i^q)^(1/q) of the singular values; q >= 1.
double q_norm(const ComplexMatrix& m, RenyiOrder q);
double q_norm(const Spectrum& singular, RenyiOrder q);
/// l_q norm of a vector of non-negative reals; q >= 1.
double vector_q_norm(std::span<const double> x, RenyiOrder q);

/// Hilbert-Schmidt (entrywise Frobenius) norm.
double hs_norm(const ComplexMatrix& m);

/// ||H - H^dag||_2 / ||H||_2 (zero for the zero matrix).
double hermiticity_defect(const ComplexMatrix& h);

void require_square(const ComplexMatrix& m, const char* what);
void require_finite(const ComplexMatrix& m, const char* what);
/// Returns N such that m is N^2 x N^2, or throws DimensionError.
std::size_t require_square_of_square(const ComplexMatrix& m, const char* what);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector vec_rows(const ComplexMatrix& m);
ComplexMatrix unvec_rows(const ComplexVector& v, std::size_t rows, std::size_t cols);

/// Trace over the first (A) factor of an (dim_a*dim_b)-square matrix.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);
/// Trace over the second (B) factor.
ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);
/// Transpose of the second (B) factor: out_{(k,m),(l,n)} = in_{(k,n),(l,m)}.
ComplexMatrix partial_transpose_second(const ComplexMatrix& m, std::size_t dim_a,
                                       std::size_t dim_b);

/// Principal square root of a PSD matrix (negative roundoff eigenvalues clamped).
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

/// Number of values above `cutoff`.
std::size_t count_above(const Spectrum& s, double cutoff);

}  // namespace qchan
