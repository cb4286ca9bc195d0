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

#pragma once

#include <json.hpp>

#include <string>

#include "seqspace/maps.hpp"
#include "seqspace/spaces.hpp"

namespace seqspace {

using Json = nlohmann::ordered_json;

// Config literals (rationals are strings such as "1/2"):
//   sequences: {"kind":"powlog","a":"1/2","b":"4","c":"1"}
//              {"kind":"geometric","ratio":"1/2","scale":"1"}
//              {"kind":"explicit","values":["1","-1","1/3"],"tail":"zero"}
//              {"kind":"periodic-geometric","values":["1","-1"],"ratio":"1/2"}
//              {"kind":"zero"}, {"kind":"harmonic"}, {"kind":"unit","at":3}
//   spaces:    {"kind":"lp","p":"1/2"} (p may be "inf"), {"kind":"c0"},
//              {"kind":"c"}, {"kind":"c00"}, {"kind":"kernel","weights":"ones"}
//   maps:      {"kind":"power","r":"1/2"}, {"kind":"identity"},
//              {"kind":"clipped-linear"}
//
// Compact command-line tokens mirror the JSON forms:
//   powlog:1/2,4[,c]  geometric:1/2[,scale]  explicit:1,-1,1/3  harmonic  zero
//   lp:2  lp:inf  c0  c  c00  kernel:ones   identity  power:1/2  clipped-linear

Sequence parse_sequence_json(const Json& j, ScalarField field = {});
Sequence parse_sequence_token(const std::string& token, ScalarField field = {});

SpaceSpec parse_space_json(const Json& j);
SpaceSpec parse_space_token(const std::string& token);

MapSpec parse_map_json(const Json& j);
MapSpec parse_map_token(const std::string& token);

/// Comma-separated space tokens, e.g. "lp:1,lp:1.5".
NestedFamily parse_family_token(const std::string& token);

// Config-file fields accept either a compact token string or the object form;
// families also accept an array of space literals.
Sequence parse_sequence_any(const Json& j, ScalarField field = {});
SpaceSpec parse_space_any(const Json& j);
MapSpec parse_map_any(const Json& j);
NestedFamily parse_family_any(const Json& j);

}  // namespace seqspace
