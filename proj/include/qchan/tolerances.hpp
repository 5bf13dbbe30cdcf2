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

#pragma once

namespace qchan::tol {

// Relative Hermiticity tolerance: ||H - H^dag||_2 <= herm * ||H||_2.
inline constexpr double herm = 1e-10;
// Absolute trace-preservation tolerance on ||Tr_A D - 1||_2 and ||sum A^dag A - 1||_2.
inline constexpr double tp = 1e-9;
// Relative PSD tolerance: eigenvalues >= -psd * ||D||_2 count as non-negative.
inline constexpr double psd = 1e-9;
// Relative rank cutoff for canonical Kraus operators: lambda_i > kraus * lambda_1.
inline constexpr double kraus = 1e-12;
// Relative cutoff below which singular values are exact zeros for entropies.
inline constexpr double spectrum_zero = 1e-12;
// Unitality: ||Phi(1/N) - 1/N||_2 <= unital.
inline constexpr double unital = 1e-9;
// Unitarity / isometry checks.
inline constexpr double unitary = 1e-10;
// Trace of a density matrix.
inline constexpr double trace = 1e-9;
// Bound records: satisfied iff slack >= -check.
inline constexpr double check = 1e-8;
// Saturation witnesses: |slack| <= saturation.
inline constexpr double saturation = 1e-9;
// Renyi order treated as the Shannon limit when |q - 1| < shannon_window.
inline constexpr double shannon_window = 1e-6;

}  // namespace qchan::tol
