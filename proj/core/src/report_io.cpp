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

#include "seqspace/report_io.hpp"

#include <sstream>

namespace seqspace {

namespace {

Json facts_json(const std::vector<std::pair<std::string, std::string>>& facts) {
  Json arr = Json::array();
  for (const auto& [k, v] : facts) {
    Json e;
    e["key"] = k;
    e["value"] = v;
    arr.push_back(std::move(e));
  }
  return arr;
}

Json trace_json(const std::vector<std::pair<uint64_t, double>>& trace) {
  Json arr = Json::array();
  for (const auto& [n, v] : trace) arr.push_back(Json::array({n, v}));
  return arr;
}

}  // namespace

Json to_json(const MembershipCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["method"] = to_string(c.method);
  j["space"] = c.space;
  j["sequence"] = c.sequence;
  j["rule"] = c.rule;
  if (c.exact_value) j["exact_value"] = c.exact_value->str();
  j["facts"] = facts_json(c.facts);
  j["trace"] = trace_json(c.trace);
  return j;
}

Json to_json(const InvariantAxiomReport& r) {
  Json j;
  j["passed"] = r.passed;
  j["K_estimate"] = r.K_estimate;
  j["builtin_K_is_one"] = r.builtin_K_is_one;
  if (!r.notes.empty()) j["notes"] = r.notes;
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json e;
    e["sequence"] = s.sequence;
    e["b2_holds"] = s.b2_holds;
    e["x_verdict"] = to_string(s.x_verdict);
    e["x0_verdict"] = to_string(s.x0_verdict);
    e["verdicts_agree"] = s.verdicts_agree;
    e["matched_norm_equal"] = s.matched_norm_equal;
    e["ratio"] = s.ratio;
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  return j;
}

Json to_json(const StrongInvarianceReport& r) {
  Json j;
  j["passed"] = r.passed;
  j["c00_contained"] = r.c00_contained;
  j["checked_pairs"] = r.checked_pairs;
  Json v = Json::array();
  for (const auto& viol : r.violations) {
    Json e;
    e["sample"] = viol.sample;
    e["pattern"] = viol.pattern;
    e["reason"] = viol.reason;
    if (viol.functional_value) e["functional_value"] = viol.functional_value->str();
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  return j;
}

Json to_json(const MapPropertyReport& r) {
  Json j;
  j["property"] = r.property;
  j["map"] = r.map;
  j["verdict"] = to_string(r.verdict);
  j["detail"] = r.detail;
  Json w = Json::array();
  for (const auto& wit : r.witnesses) {
    Json e;
    e["alpha"] = wit.alpha.str();
    e["x"] = wit.x.str();
    if (wit.functional) {
      Json phi = Json::array();
      for (const auto& c : *wit.functional) phi.push_back(c.str());
      e["functional"] = std::move(phi);
    }
    e["note"] = wit.note;
    w.push_back(std::move(e));
  }
  j["witnesses"] = std::move(w);
  j["facts"] = facts_json(r.facts);
  return j;
}

Json to_json(const RankReport& r) {
  Json j;
  j["k"] = r.k;
  j["n_requested"] = r.n_requested;
  j["n_effective"] = r.n_effective;
  j["rank"] = r.rank;
  j["full_rank"] = r.full_rank;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const CombinationCertificate& c) {
  Json j;
  j["case"] = c.describe_case();
  j["coefficients"] = c.coefficients;
  j["p_index"] = c.p_index;
  if (c.escaping_subsequence) j["escaping_subsequence"] = c.escaping_subsequence->describe();
  j["all_out"] = c.all_out;
  j["inconclusive"] = c.inconclusive;
  j["lift"] = c.lift;
  Json members = Json::array();
  for (const auto& m : c.per_member) members.push_back(to_json(m));
  j["per_member"] = std::move(members);
  return j;
}

Json to_json(const SeriesBoundReport& r) {
  Json j;
  j["stilde"] = r.stilde.str();
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["exact_equal"] = r.exact_equal;
  j["holds"] = r.holds;
  j["terms_per_basis"] = r.terms_per_basis;
  j["note"] = r.note;
  return j;
}

Json to_json(const RegressionReport& r) {
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["findings"] = r.findings;
  return j;
}

Json to_json(const WeakSupNorm& w) {
  Json j;
  j["value"] = w.value;
  if (w.exact) j["exact"] = w.exact->str();
  Json phi = Json::array();
  for (const auto& c : w.attained_by) phi.push_back(c.str());
  j["attained_by"] = std::move(phi);
  j["exact_over_ball"] = w.exact_over_ball;
  return j;
}

Json to_json(const FunctionalFamily& f) {
  auto vectors = [](const std::vector<std::vector<Rational>>& list) {
    Json arr = Json::array();
    for (const auto& phi : list) {
      Json v = Json::array();
      for (const auto& c : phi) v.push_back(c.str());
      arr.push_back(std::move(v));
    }
    return arr;
  };
  Json j;
  j["space"] = f.space.describe();
  j["seed"] = f.seed;
  j["extreme_exhaustive"] = f.extreme_exhaustive;
  j["extreme"] = vectors(f.extreme);
  j["sampled"] = vectors(f.sampled);
  return j;
}

std::string tool_version() {
#ifdef SEQSPACE_VERSION
  return SEQSPACE_VERSION;
#else
  return "0.0.0";
#endif
}

Json certificate_document(const std::string& command, uint64_t seed, Json payload) {
  Json j;
  j["tool"] = "seqspace";
  j["version"] = tool_version();
  j["command"] = command;
  j["seed"] = seed;
  j["payload"] = std::move(payload);
  return j;
}

std::string trace_csv(const std::vector<std::pair<uint64_t, double>>& trace) {
  std::ostringstream os;
  os << "n,value\n";
  os.precision(17);
  for (const auto& [n, v] : trace) os << n << "," << v << "\n";
  return os.str();
}

}  // namespace seqspace
