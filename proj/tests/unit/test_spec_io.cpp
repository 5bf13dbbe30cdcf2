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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "qchan/bounds.hpp"
#include "qchan/channel_spec.hpp"
#include "qchan/errors.hpp"
#include "qchan/report_io.hpp"
#include "qchan/rng.hpp"
#include "qchan/zoo.hpp"

using namespace qchan;
using nlohmann::json;

namespace {

std::string data_file(const std::string& name) { return std::string(QCHAN_TEST_DATA) + "/" + name; }

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

template <class E>
std::string error_of(const std::string& text) {
  try {
    parse_channel_spec(text);
  } catch (const E& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST(ChannelSpec, DataFiles) {
  EXPECT_LT(max_diff(load_channel_spec(data_file("identity.json")).superoperator(),
                     identity_channel(2).superoperator()),
            1e-15);
  EXPECT_LT(max_diff(load_channel_spec(data_file("maximally_depolarizing.json")).superoperator(),
                     completely_depolarizing(2).superoperator()),
            1e-15);
  const Channel se = load_channel_spec(data_file("amplitude_kraus.json"));
  EXPECT_EQ(se.label(), "spontaneous_emission_kraus");
  EXPECT_LT(max_diff(se.superoperator(), spontaneous_emission().superoperator()), 1e-15);
  const Channel bad = load_channel_spec(data_file("scaled_identity_noncp.json"));
  EXPECT_FALSE(bad.flags().tp);
  EXPECT_THROW(load_channel_spec(data_file("nope.json")), IoError);
}

TEST(ChannelSpec, MalformedJsonReportsPosition) {
  try {
    load_channel_spec(data_file("malformed.json"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ChannelSpec, SchemaErrorsNameTheField) {
  EXPECT_NE(error_of<ParseError>(R"({"dim":2})").find("form"), std::string::npos);
  EXPECT_NE(error_of<ParseError>(R"({"form":"superoperator","matrices":[[[1]]]})").find("/dim"), std::string::npos);
  EXPECT_NE(error_of<ParseError>(R"({"form":"family","family":{"name":"bogus"}})").find("/family/name"),
            std::string::npos);
  EXPECT_NE(error_of<ParseError>(R"({"form":"kraus","dim":2,"matrices":[[[1,0],[0,"x"]]]})").find("/matrices/0"),
            std::string::npos);
  EXPECT_NE(error_of<ParseError>(R"({"form":"family","family":{"name":"depolarizing","params":{}}})")
                .find("alpha"),
            std::string::npos);
  EXPECT_NE(error_of<ParseError>(R"({"form":"kraus","dim":2,"permissive":true,"matrices":[[[1,0],[0,1]]]})")
                .find("/permissive"),
            std::string::npos);
}

TEST(ChannelSpec, PhysicalErrorsKeepTheirClass) {
  EXPECT_NE(error_of<ValidationError>(R"({"form":"kraus","dim":2,"matrices":[[[1,0],[0,0]]]})").find("/matrices"),
            std::string::npos);
  EXPECT_NE(error_of<DomainError>(R"({"form":"family","dim":2,"family":{"name":"depolarizing","params":{"alpha":2}}})")
                .find("/family"),
            std::string::npos);
  EXPECT_NE(error_of<DimensionError>(R"({"form":"family","dim":3,"family":{"name":"pauli","params":{"p":[1,0,0,0]}}})"),
            "no error");
}

TEST(ChannelSpec, ComplexEntriesAndChoiForm) {
  const Channel ch = parse_channel_spec(
      R"({"form":"kraus","dim":2,"matrices":[[[0,[0,-1]],[[0,1],0]]]})");  // Pauli Y
  ComplexMatrix y(2, 2);
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  ComplexMatrix rho(2, 2);
  rho << 0.6, Complex(0.1, 0.3), Complex(0.1, -0.3), 0.4;
  EXPECT_LT(max_diff(qchan::apply(ch, rho), y * rho * y.adjoint()), 1e-15);

  json choi_doc = {{"form", "choi"}, {"dim", 2}, {"matrices", json::array({matrix_to_json(coarse_graining(2).choi())})}};
  EXPECT_LT(max_diff(channel_from_spec(choi_doc).superoperator(), coarse_graining(2).superoperator()), 1e-15);
}

TEST(ChannelSpec, FamiliesBuildExpectedChannels) {
  EXPECT_LT(max_diff(family_channel("pauli", {{"p", {0.25, 0.25, 0.25, 0.25}}}, 0).superoperator(),
                     completely_depolarizing(2).superoperator()),
            1e-12);
  EXPECT_LT(max_diff(family_channel("interval", {{"alpha", 1}, {"beta", 0}}, 2).superoperator(),
                     interval_channel(1, 0, 0, 0).superoperator()),
            1e-15);
  EXPECT_LT(max_diff(family_channel("reshuffle_invariant", {{"eta", {0, 0, 1}}}, 2).superoperator(),
                     coarse_graining(2).superoperator()),
            1e-15);
  RngStream rng(3);
  EXPECT_EQ(max_diff(family_channel("random_cptp", {{"seed", 3}, {"env_dim", 2}}, 3).superoperator(),
                     random_cptp(3, 2, rng).superoperator()),
            0.0);
  for (const std::string& name : family_names()) {
    json params = json::object();
    if (name == "depolarizing") params = {{"alpha", 0.5}};
    if (name == "interval") params = {{"alpha", 0.5}, {"beta", 0.2}};
    if (name == "pauli") params = {{"p", {0.1, 0.2, 0.3, 0.4}}};
    if (name == "reshuffle_invariant") params = {{"eta", {0.2, 0.3, 0.5}}};
    if (name == "complete_contraction") params = {{"xi", {{0.5, 0}, {0, 0.5}}}};
    const Channel ch = family_channel(name, params, 2);
    EXPECT_TRUE(ch.flags().cp && ch.flags().tp) << name;
    EXPECT_EQ(ch.family(), name);
  }
}

TEST(ChannelSpec, RoundTripIsExact) {
  RngStream rng(4);
  const Channel ch = random_cptp(3, 4, rng);
  const Channel back = channel_from_spec(json::parse(channel_to_spec(ch).dump()));
  EXPECT_EQ(max_diff(ch.superoperator(), back.superoperator()), 0.0);
  EXPECT_EQ(back.label(), ch.label());
  const Channel bad = load_channel_spec(data_file("scaled_identity_noncp.json"));
  EXPECT_EQ(max_diff(channel_from_spec(channel_to_spec(bad)).superoperator(), bad.superoperator()), 0.0);
}

TEST(ReportIo, NumberFormatting) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(std::log(2.0)), "0.6931471805599453");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_TRUE(json_number(std::nan("")).is_null());
  EXPECT_EQ(json_order(RenyiOrder::infinity()), json("inf"));
  EXPECT_EQ(json_order(1.5), json(1.5));
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
  EXPECT_EQ(csv_field("plain"), "plain");
}

TEST(ReportIo, BoundReportEncodings) {
  const BoundReport r = evaluate_all(identity_channel(2), 2.0);
  const json j = to_json(r);
  EXPECT_EQ(j["records"].size(), r.records.size());
  EXPECT_EQ(j["records"][0]["id"], r.records[0].id);
  EXPECT_TRUE(j["records"][0].contains("formula"));
  const std::string rows = bound_report_csv_rows(r);
  EXPECT_EQ(static_cast<std::size_t>(std::count(rows.begin(), rows.end(), '\n')), r.records.size());
  EXPECT_EQ(bound_report_csv_header(), "channel_label,q,id,lhs,rhs,slack,satisfied");
}
