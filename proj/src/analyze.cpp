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

#include <cmath>

#include "qchan/bounds.hpp"
#include "qchan/channel_spec.hpp"
#include "qchan/commands.hpp"
#include "qchan/entropy.hpp"
#include "qchan/errors.hpp"
#include "qchan/report_io.hpp"
#include "qchan/separability.hpp"
#include "qchan/tolerances.hpp"

namespace qchan {

using nlohmann::json;

namespace {

bool at_least_one(RenyiOrder q) {
  return q.is_infinite() || q.value() >= 1.0 - tol::shannon_window;
}

/// Entropy that may be undefined for invalid inputs: null plus a message.
template <typename F>
json guarded(F fn, json& errors, const std::string& key) {
  try {
    return json_number(fn());
  } catch (const Error& e) {
    errors[key] = e.what();
    return nullptr;
  }
}

}  // namespace

json analyze_channel(const Channel& ch, const std::vector<RenyiOrder>& qs, bool bits) {
  if (qs.empty()) throw DomainError("analyze needs at least one Renyi order");
  json doc;
  json errors = json::object();
  doc["label"] = ch.label();
  doc["family"] = ch.family();
  doc["dim"] = ch.dim();
  doc["flags"] = {{"cp", ch.flags().cp}, {"tp", ch.flags().tp}, {"unital", ch.flags().unital}};

  const auto& sv = ch.superoperator_singular_values();
  doc["sigma1"] = json_number(sv.largest());
  doc["lambda_phi"] = json_number(sv.total);
  doc["d1"] = json_number(ch.choi_eigenvalues().largest());
  doc["tau1"] = guarded([&] { return output_of_maximally_mixed(ch).tau1; }, errors, "tau1");
  if (ch.dim() == 2 && ch.flags().unital) {
    const auto axes = bloch_ellipsoid(ch);
    doc["bloch_ellipsoid"] = {json_number(axes[0]), json_number(axes[1]), json_number(axes[2])};
  } else {
    doc["bloch_ellipsoid"] = nullptr;
  }

  const double unit = bits ? 1.0 / std::log(2.0) : 1.0;
  doc["entropy_units"] = bits ? "bits" : "nats";
  json entropies = json::array();
  json reports = json::array();
  bool all_satisfied = true;
  for (const RenyiOrder q : qs) {
    const std::string tag = "q=" + q.to_string();
    json e;
    e["q"] = json_order(q);
    e["s_map"] = guarded([&] { return unit * map_entropy(ch, q); }, errors, "s_map " + tag);
    e["s_rec"] = guarded([&] { return unit * receiver_entropy(ch, q); }, errors, "s_rec " + tag);
    e["s_output"] = guarded([&] { return unit * output_entropy(ch, q); }, errors, "s_output " + tag);
    entropies.push_back(std::move(e));
    const BoundReport report = evaluate_all(ch, q);
    all_satisfied = all_satisfied && report.all_satisfied();
    reports.push_back(to_json(report));
  }
  doc["entropies"] = std::move(entropies);
  doc["bounds"] = std::move(reports);
  doc["all_bounds_satisfied"] = all_satisfied;

  std::vector<RenyiOrder> sep_orders;
  for (const RenyiOrder q : qs)
    if (at_least_one(q)) sep_orders.push_back(q);
  if (sep_orders.empty()) sep_orders.push_back(RenyiOrder(2.0));
  json verdicts = json::array();
  Region region = Region::B;
  bool have_region = false;
  for (const RenyiOrder q : sep_orders) {
    try {
      const SeparabilityVerdict v = classify_region(ch, q);
      json jv = to_json(v);
      jv["q"] = json_order(q);
      verdicts.push_back(std::move(jv));
      if (!have_region || v.region == Region::A) region = v.region;
      have_region = true;
    } catch (const Error& e) {
      errors["separability q=" + q.to_string()] = e.what();
    }
  }
  doc["separability"] = std::move(verdicts);
  doc["region"] = have_region ? json(region_name(region)) : json(nullptr);
  doc["superoperator"] = matrix_to_json(ch.superoperator());
  if (!errors.empty()) doc["errors"] = std::move(errors);
  return doc;
}

}  // namespace qchan
