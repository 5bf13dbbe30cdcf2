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

// JSON and CSV encodings of reports. Numbers use the shortest text that
// round-trips; non-finite values become null in JSON.

#pragma once

#include <string>

#include <json.hpp>

#include "qchan/bounds.hpp"
#include "qchan/entropy.hpp"
#include "qchan/separability.hpp"

namespace qchan {

/// Shortest round-trip decimal; "inf", "-inf", "nan" for non-finite values.
std::string format_number(double v);

/// Finite values as numbers, anything else as null.
nlohmann::json json_number(double v);

/// Finite orders as numbers, infinity as the string "inf".
nlohmann::json json_order(RenyiOrder q);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& text);

nlohmann::json to_json(const BoundRecord& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const SeparabilityVerdict& v);
nlohmann::json to_json(const EntropyPoint& p);

/// "channel_label,q,id,lhs,rhs,slack,satisfied"
std::string bound_report_csv_header();
/// One line per record, each terminated by '\n'.
std::string bound_report_csv_rows(const BoundReport& r);

}  // namespace qchan
