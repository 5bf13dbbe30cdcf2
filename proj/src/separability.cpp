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

#include "qchan/separability.hpp"

#include <cmath>

#include "qchan/entropy.hpp"
#include "qchan/errors.hpp"
#include "qchan/tolerances.hpp"

namespace qchan {

const char* region_name(Region r) {
  switch (r) {
    case Region::A:
      return "A";
    case Region::B:
      return "B";
    case Region::C:
      return "C";
    case Region::indeterminate:
      return "indeterminate";
  }
  return "?";
}

RealignmentResult realignment_test(const Channel& ch) {
  RealignmentResult r;
  r.value = ch.superoperator_singular_values().total / static_cast<double>(ch.dim());
  r.entangled_certificate = r.value > 1.0 + 1e-9;
  return r;
}

PptResult ppt_test(const Channel& ch) {
  const std::size_t n = ch.dim();
  const ComplexMatrix omega = ch.choi_state();
  ComplexMatrix pt = partial_transpose_second(omega, n, n);
  pt = 0.5 * (pt + pt.adjoint()).eval();
  const Spectrum ev = hermitian_eigenvalues(pt);
  PptResult r;
  r.min_eigenvalue = ev.smallest();
  r.ppt = r.min_eigenvalue >= -tol::psd * std::max(1.0, omega.norm());
  return r;
}

std::array<BoundRecord, 3> separable_criteria(const Channel& ch, RenyiOrder q) {
  if (!q.is_infinite() && !(q.value() >= 1.0 - tol::shannon_window)) {
    throw DomainError("separability criteria require q >= 1, got " + q.to_string());
  }
  const std::size_t n = ch.dim();
  const double ln_n = std::log(static_cast<double>(n));
  const double s_map = map_entropy(ch, q);
  const double s_rec = receiver_entropy(ch, q);
  return {make_record("separable.map_floor", s_map, Relation::ge, 0.25 * f_min(q) * ln_n,
                      "S_q^map >= (F_min/4) ln N"),
          make_record("separable.receiver_cap", s_rec, Relation::le,
                      receiver_upper_value(static_cast<double>(n), n, q),
                      "S_q^rec <= ln(((N+1)^q + N^2 - 1)/(N^q (N+1)^q))/(1-q)"),
          make_record("separable.map_vs_rec", s_map, Relation::ge, g_min(q) * s_rec,
                      "S_q^map >= G_min S_q^rec")};
}

SeparabilityVerdict classify_region(const Channel& ch, RenyiOrder q) {
  SeparabilityVerdict v;
  const RealignmentResult re = realignment_test(ch);
  v.realignment_value = re.value;
  v.realignment_pass = !re.entangled_certificate;
  const PptResult pt = ppt_test(ch);
  v.ppt_min_eigenvalue = pt.min_eigenvalue;
  v.ppt_pass = pt.ppt;
  v.criteria = separable_criteria(ch, q);
  bool violated = false;
  for (const auto& r : v.criteria) violated = violated || !r.satisfied;
  if (violated) {
    v.region = Region::A;
  } else if (v.ppt_pass) {
    v.region = ch.dim() == 2 ? Region::C : Region::indeterminate;
  } else {
    v.region = Region::B;
  }
  return v;
}

}  // namespace qchan
