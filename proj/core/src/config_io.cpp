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

#include "seqspace/config_io.hpp"

#include <sstream>

namespace seqspace {

namespace {

Rational rat_field(const Json& j, const std::string& key, const char* fallback = nullptr) {
  if (!j.contains(key)) {
    if (fallback) return Rational::parse(fallback);
    throw ConfigError("config: missing field '" + key + "'");
  }
  const auto& v = j.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ConfigError("config: field '" + key + "' must be a rational string");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Scalar rational_scalar(const Rational& r, ScalarField field) {
  switch (field.mode) {
    case ScalarMode::RealRational:
      return Scalar::rational(r);
    case ScalarMode::RealFloat:
      return Scalar::real(r.to_double());
    case ScalarMode::ComplexFloat:
      return Scalar::complex({r.to_double(), 0.0});
  }
  throw ConfigError("config: bad scalar mode");
}

}  // namespace

Sequence parse_sequence_json(const Json& j, ScalarField field) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigError("config: sequence literal needs a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "powlog")
    return powlog_sequence(rat_field(j, "a"), rat_field(j, "b", "0"),
                           rat_field(j, "c", "1"), field);
  if (kind == "geometric")
    return geometric_sequence(rat_field(j, "ratio"), field, rat_field(j, "scale", "1"));
  if (kind == "explicit" || kind == "periodic-geometric") {
    if (!j.contains("values") || !j.at("values").is_array())
      throw ConfigError("config: '" + kind + "' needs a 'values' array");
    std::vector<Rational> vals;
    for (const auto& v : j.at("values"))
      vals.push_back(v.is_string() ? Rational::parse(v.get<std::string>())
                                   : Rational(v.get<long>()));
    if (kind == "periodic-geometric") {
      std::vector<Scalar> block;
      for (const auto& r : vals) block.push_back(rational_scalar(r, field));
      return periodic_geometric_sequence(std::move(block), rat_field(j, "ratio"), field);
    }
    if (j.contains("tail") && j.at("tail").get<std::string>() != "zero")
      throw ConfigError("config: explicit sequences support only a zero tail");
    std::vector<Value> values;
    for (const auto& r : vals) values.push_back(Value::scalar(rational_scalar(r, field)));
    return explicit_sequence(std::move(values), ValueSpace{field, std::nullopt});
  }
  if (kind == "zero") return zero_sequence(ValueSpace{field, std::nullopt});
  if (kind == "harmonic") return harmonic_sequence(field);
  if (kind == "unit")
    return unit_coordinate_sequence(j.contains("at") ? j.at("at").get<uint64_t>() : 1,
                                    field);
  throw ConfigError("config: unknown sequence kind '" + kind + "'");
}

Sequence parse_sequence_token(const std::string& token, ScalarField field) {
  const auto colon = token.find(':');
  const std::string kind = token.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : token.substr(colon + 1);
  Json j;
  j["kind"] = kind;
  if (kind == "powlog") {
    const auto parts = split(args, ',');
    if (parts.empty() || parts[0].empty())
      throw ConfigError("powlog token needs at least the exponent a");
    j["a"] = parts[0];
    if (parts.size() > 1) j["b"] = parts[1];
    if (parts.size() > 2) j["c"] = parts[2];
    return parse_sequence_json(j, field);
  }
  if (kind == "geometric") {
    const auto parts = split(args, ',');
    if (parts.empty() || parts[0].empty()) throw ConfigError("geometric token needs a ratio");
    j["ratio"] = parts[0];
    if (parts.size() > 1) j["scale"] = parts[1];
    return parse_sequence_json(j, field);
  }
  if (kind == "explicit" || kind == "periodic-geometric") {
    const auto parts = split(args, ',');
    Json vals = Json::array();
    if (kind == "periodic-geometric") {
      // last component is the ratio
      if (parts.size() < 2) throw ConfigError("periodic-geometric token: values...,ratio");
      for (size_t i = 0; i + 1 < parts.size(); ++i) vals.push_back(parts[i]);
      j["ratio"] = parts.back();
    } else {
      for (const auto& p : parts)
        if (!p.empty()) vals.push_back(p);
    }
    j["values"] = vals;
    return parse_sequence_json(j, field);
  }
  if (kind == "unit") {
    if (!args.empty()) j["at"] = static_cast<uint64_t>(std::stoull(args));
    return parse_sequence_json(j, field);
  }
  if (kind == "zero" || kind == "harmonic") return parse_sequence_json(j, field);
  throw ConfigError("unknown sequence token '" + token + "'");
}

SpaceSpec parse_space_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigError("config: space literal needs a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lp") {
    if (!j.contains("p")) throw ConfigError("config: lp space needs 'p'");
    const auto& p = j.at("p");
    if (p.is_string() && (p.get<std::string>() == "inf" || p.get<std::string>() == "infinity"))
      return SpaceSpec::lp_infinity();
    return SpaceSpec::lp(rat_field(j, "p"));
  }
  if (kind == "c0") return SpaceSpec::c0();
  if (kind == "c") return SpaceSpec::c();
  if (kind == "c00") return SpaceSpec::c00();
  if (kind == "kernel") {
    KernelWeights w;
    const std::string weights =
        j.contains("weights") ? j.at("weights").get<std::string>() : "ones";
    if (weights == "ones") {
      w.kind = KernelWeights::Kind::Ones;
    } else if (weights.rfind("geometric:", 0) == 0) {
      w.kind = KernelWeights::Kind::Geometric;
      w.ratio = Rational::parse(weights.substr(10));
    } else {
      throw ConfigError("config: unsupported kernel weights '" + weights + "'");
    }
    return SpaceSpec::kernel(std::move(w));
  }
  throw ConfigError("config: unknown space kind '" + kind + "'");
}

SpaceSpec parse_space_token(const std::string& token) {
  const auto colon = token.find(':');
  const std::string kind = token.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : token.substr(colon + 1);
  Json j;
  j["kind"] = kind;
  if (kind == "lp") {
    if (args.empty()) throw ConfigError("lp token needs an exponent, e.g. lp:2 or lp:inf");
    j["p"] = args;
  } else if (kind == "kernel") {
    j["weights"] = args.empty() ? "ones" : args;
  }
  return parse_space_json(j);
}

MapSpec parse_map_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigError("config: map literal needs a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "identity") return MapSpec::identity();
  if (kind == "power") return MapSpec::power(rat_field(j, "r"));
  if (kind == "clipped-linear") return MapSpec::clipped_linear();
  throw ConfigError("config: unknown map kind '" + kind + "'");
}

MapSpec parse_map_token(const std::string& token) {
  const auto colon = token.find(':');
  const std::string kind = token.substr(0, colon);
  Json j;
  j["kind"] = kind;
  if (kind == "power") {
    if (colon == std::string::npos) throw ConfigError("power token needs an exponent");
    j["r"] = token.substr(colon + 1);
  }
  return parse_map_json(j);
}

NestedFamily parse_family_token(const std::string& token) {
  std::vector<SpaceSpec> members;
  for (const auto& part : split(token, ','))
    if (!part.empty()) members.push_back(parse_space_token(part));
  return NestedFamily(std::move(members));
}

Sequence parse_sequence_any(const Json& j, ScalarField field) {
  if (j.is_string()) return parse_sequence_token(j.get<std::string>(), field);
  return parse_sequence_json(j, field);
}

SpaceSpec parse_space_any(const Json& j) {
  if (j.is_string()) return parse_space_token(j.get<std::string>());
  return parse_space_json(j);
}

MapSpec parse_map_any(const Json& j) {
  if (j.is_string()) return parse_map_token(j.get<std::string>());
  return parse_map_json(j);
}

NestedFamily parse_family_any(const Json& j) {
  if (j.is_string()) return parse_family_token(j.get<std::string>());
  if (!j.is_array()) throw ConfigError("config: family must be a token or an array");
  std::vector<SpaceSpec> members;
  for (const auto& e : j) members.push_back(parse_space_any(e));
  return NestedFamily(std::move(members));
}

}  // namespace seqspace
