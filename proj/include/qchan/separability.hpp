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

// Entanglement tests on the normalized Choi state omega = D/N of a channel:
// realignment, partial transpose and three entropic necessary conditions
// for separability.

#pragma once

#include <array>
#include <string>

#include "qchan/bounds.hpp"
#include "qchan/channels.hpp"

namespace qchan {

enum class Region { A, B, C, indeterminate };

const char* region_name(Region r);

struct RealignmentResult {
  double value = 0.0;  // Lambda / N
  bool entangled_certificate = false;
};

struct PptResult {
  double min_eigenvalue = 0.0;
  bool ppt = false;
};

struct SeparabilityVerdict {
  double realignment_value = 0.0;
  bool realignment_pass = false;
  double ppt_min_eigenvalue = 0.0;
  bool ppt_pass = false;
  Region region = Region::B;
  std::array<BoundRecord, 3> criteria;
};

RealignmentResult realignment_test(const Channel& ch);

/// Partial transpose on the second factor of omega.
PptResult ppt_test(const Channel& ch);

/// Necessary conditions on a separable omega, q >= 1:
///   separable.map_floor      S_q^map >= (F_min/4) ln N
///   separable.receiver_cap   S_q^rec <= receiver_upper_value(N, N, q)
///   separable.map_vs_rec     S_q^map >= G_min S_q^rec
std::array<BoundRecord, 3> separable_criteria(const Channel& ch, RenyiOrder q);

/// A: some criterion violated. C: N = 2 and PPT. indeterminate: N >= 3 and
/// PPT. B otherwise.
SeparabilityVerdict classify_region(const Channel& ch, RenyiOrder q);

}  // namespace qchan
