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

#include <algorithm>
#include <array>
#include <sstream>

#include "qchan/commands.hpp"
#include "qchan/entropy.hpp"
#include "qchan/errors.hpp"
#include "qchan/report_io.hpp"
#include "qchan/zoo.hpp"

namespace qchan {

const std::vector<std::string>& curve_names() {
  static const std::vector<std::string> names = {"ab", "interval_cd", "diagonal_Rinv"};
  return names;
}

std::string run_curve(const std::string& name, std::size_t grid, RenyiOrder q) {
  const auto& names = curve_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw DomainError("unknown curve '" + name + "' (ab, interval_cd, diagonal_Rinv)");
  }
  if (grid < 2) throw DomainError("curve grid needs at least 2 points");
  const bool shannon = !q.is_infinite() && q.value() == 1.0;
  std::ostringstream os;
  os << "param,s_map,s_rec\n";
  for (std::size_t i = 0; i < grid; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid - 1);
    double s_map = 0.0;
    double s_rec = 0.0;
    if (name == "ab" && shannon) {
      const CurvePoint p = curve_ab_point(t);
      s_map = p.s_map;
      s_rec = p.s_rec;
    } else {
      Channel ch = name == "ab"            ? depolarizing(2, t)
                   : name == "interval_cd" ? interval_channel(1.0, t, 0.0, 0.0)
                                           : reshuffle_invariant({t / 2, t / 2, 1.0 - t},
                                                                 ComplexMatrix::Identity(2, 2));
      s_map = map_entropy(ch, q);
      s_rec = receiver_entropy(ch, q);
    }
    os << format_number(t) << ',' << format_number(s_map) << ',' << format_number(s_rec) << '\n';
  }
  return os.str();
}

}  // namespace qchan
