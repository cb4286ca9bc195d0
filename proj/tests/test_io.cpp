// Copyright 2026 The seqspace authors
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

#include <doctest.h>

#include "seqspace/gallery.hpp"
#include "seqspace/report_io.hpp"

using namespace seqspace;

namespace {
const ScalarField kRat{};
Rational at(const Sequence& s, uint64_t j) { return s.eval(j).as_scalar().rat(); }
}  // namespace

TEST_CASE("sequence literals parse from JSON") {
  const auto powlog =
      parse_sequence_json(Json::parse(R"({"kind":"powlog","a":"1/2","b":"4","c":"1"})"));
  REQUIRE(powlog.envelope().has_value());
  CHECK(powlog.envelope()->a == Rational(1, 2));
  CHECK(powlog.envelope()->b == Rational(4));

  const auto geo = parse_sequence_json(Json::parse(R"({"kind":"geometric","ratio":"1/2"})"));
  CHECK(at(geo, 3) == Rational(1, 8));

  const auto expl = parse_sequence_json(
      Json::parse(R"({"kind":"explicit","values":["1","-1","1/3"],"tail":"zero"})"));
  CHECK(at(expl, 2) == Rational(-1));
  CHECK(at(expl, 4) == Rational(0));

  CHECK_THROWS_AS(parse_sequence_json(Json::parse(R"({"kind":"mystery"})")), ConfigError);
  CHECK_THROWS_AS(
      parse_sequence_json(Json::parse(R"({"kind":"explicit","values":["1"],"tail":"ones"})")),
      ConfigError);
}

TEST_CASE("space and map literals parse from JSON") {
  CHECK(parse_space_json(Json::parse(R"({"kind":"lp","p":"1/2"})")).describe() == "lp(1/2)");
  CHECK(parse_space_json(Json::parse(R"({"kind":"lp","p":"inf"})")).infinite_p());
  CHECK(parse_space_json(Json::parse(R"({"kind":"c0"})")).describe() == "c0");
  CHECK(parse_space_json(Json::parse(R"({"kind":"kernel","weights":"ones"})")).describe() ==
        "kernel(ones)");
  CHECK(parse_map_json(Json::parse(R"({"kind":"power","r":"1/2"})")).describe() ==
        "power(1/2)");
  CHECK(parse_map_json(Json::parse(R"({"kind":"identity"})")).describe() == "identity");
  CHECK_THROWS_AS(parse_space_json(Json::parse(R"({"kind":"orlicz"})")), ConfigError);
}

TEST_CASE("command-line tokens mirror the JSON forms") {
  CHECK(parse_space_token("lp:1.5").p() == Rational(3, 2));
  CHECK(parse_space_token("lp:inf").infinite_p());
  const auto mother = parse_sequence_token("powlog:1/2,1");
  CHECK(mother.envelope()->a == Rational(1, 2));
  CHECK(mother.envelope()->b == Rational(1));
  CHECK(at(parse_sequence_token("geometric:1/2"), 3) == Rational(1, 8));
  CHECK(at(parse_sequence_token("explicit:1,-1,1/3"), 3) == Rational(1, 3));
  CHECK(at(parse_sequence_token("unit:3"), 3) == Rational(1));
  const auto fam = parse_family_token("lp:1,lp:1.5");
  CHECK(fam.members().size() == 2);
  CHECK(fam.largest().p() == Rational(3, 2));
  CHECK_THROWS_AS(parse_sequence_token("powlog"), ConfigError);
  CHECK_THROWS_AS(parse_space_token("lp"), ConfigError);
}

TEST_CASE("certificates serialize deterministically") {
  const auto cert = decide_membership(SpaceSpec::lp(Rational(1)),
                                      powlog_sequence(Rational(1), Rational(0), Rational(1), kRat));
  const Json a = certificate_document("probe", 0, to_json(cert));
  const Json b = certificate_document("probe", 0, to_json(cert));
  CHECK(a.dump(2) == b.dump(2));
  CHECK(a["tool"] == "seqspace");
  CHECK(a["payload"]["verdict"] == "Out");

  // Serialization carries exact rationals as strings.
  const auto kernel_cert = decide_membership(SpaceSpec::kernel(),
                                             restrict_to(kernel_witness(), IndexSet::odds()));
  const Json k = to_json(kernel_cert);
  CHECK(k["exact_value"] == "2");
}

TEST_CASE("traces render as two-column CSV") {
  const auto trace = partial_norm_trace(SpaceSpec::lp(Rational(1)),
                                        geometric_sequence(Rational(1, 2), kRat), 3);
  const std::string csv = trace_csv(trace);
  CHECK(csv.rfind("n,value\n", 0) == 0);
  CHECK(csv.find("1,0.5\n") != std::string::npos);
  CHECK(csv.find("2,0.75\n") != std::string::npos);
  CHECK(csv.find("3,0.875\n") != std::string::npos);
}

TEST_CASE("regression reports serialize") {
  const Json j = to_json(finite_dim_pointwise_failure());
  CHECK(j["passed"] == true);
  CHECK(j["name"] == "finite-dimensional");
}
