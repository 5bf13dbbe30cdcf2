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

#include "qchan/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace qchan {

using nlohmann::json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v == 0.0 ? 0.0 : v;
}

json json_order(RenyiOrder q) {
  if (q.is_infinite()) return "inf";
  return q.value();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json to_json(const BoundRecord& r) {
  json j;
  j["id"] = r.id;
  j["lhs"] = json_number(r.lhs);
  j["relation"] = relation_symbol(r.relation);
  j["rhs"] = json_number(r.rhs);
  j["slack"] = json_number(r.slack);
  j["satisfied"] = r.satisfied;
  j["formula"] = r.citation;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

json to_json(const BoundReport& r) {
  json j;
  j["channel_label"] = r.channel_label;
  j["q"] = json_order(r.q);
  j["all_satisfied"] = r.all_satisfied();
  json recs = json::array();
  for (const auto& rec : r.records) recs.push_back(to_json(rec));
  j["records"] = std::move(recs);
  const auto& a = r.aggregates;
  j["aggregates"] = {{"sigma1", json_number(a.sigma1)}, {"tau1", json_number(a.tau1)},
                     {"d1", json_number(a.d1)},         {"lambda_phi", json_number(a.lambda_phi)},
                     {"f_min", json_number(a.f_min)},   {"f_max", json_number(a.f_max)},
                     {"g_min", json_number(a.g_min)}};
  return j;
}

json to_json(const SeparabilityVerdict& v) {
  json j;
  j["realignment_value"] = json_number(v.realignment_value);
  j["realignment_pass"] = v.realignment_pass;
  j["ppt_min_eigenvalue"] = json_number(v.ppt_min_eigenvalue);
  j["ppt_pass"] = v.ppt_pass;
  j["region"] = region_name(v.region);
  json crit = json::array();
  for (const auto& c : v.criteria) crit.push_back(to_json(c));
  j["criteria"] = std::move(crit);
  return j;
}

json to_json(const EntropyPoint& p) {
  json j;
  j["q"] = json_order(p.q);
  j["s_map"] = json_number(p.s_map);
  j["s_rec"] = json_number(p.s_rec);
  j["channel_label"] = p.channel_label;
  if (p.extras) {
    j["lambda_phi"] = json_number(p.extras->lambda_phi);
    j["sigma1"] = json_number(p.extras->sigma1);
    j["tau1"] = json_number(p.extras->tau1);
    j["d1"] = json_number(p.extras->d1);
  }
  return j;
}

std::string bound_report_csv_header() { return "channel_label,q,id,lhs,rhs,slack,satisfied"; }

std::string bound_report_csv_rows(const BoundReport& r) {
  std::ostringstream os;
  const std::string label = csv_field(r.channel_label);
  const std::string q = r.q.is_infinite() ? "inf" : format_number(r.q.value());
  for (const auto& rec : r.records) {
    os << label << ',' << q << ',' << rec.id << ',' << format_number(rec.lhs) << ','
       << format_number(rec.rhs) << ',' << format_number(rec.slack) << ','
       << (rec.satisfied ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace qchan
