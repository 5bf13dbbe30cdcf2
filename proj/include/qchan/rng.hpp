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

#include <cstdint>
#include <random>

#include "qchan/matcore.hpp"

namespace qchan {

/// splitmix64 finalizer over (base, index); used to give every sample of a
/// scan its own stream so results do not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Seeded random stream. Identical seeds reproduce identical sequences.
class RngStream {
 public:
  static constexpr const char* algorithm = "mt19937_64";

  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  /// Independent stream for sub-task `index`.
  RngStream split(std::uint64_t index) const { return RngStream(derive_seed(seed_, index)); }

  /// Uniform on [0, 1).
  double uniform() { return uniform_(engine_); }
  double normal() { return normal_(engine_); }
  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal();
  /// Uniform on {0, ..., n-1}.
  std::size_t index(std::size_t n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qchan
