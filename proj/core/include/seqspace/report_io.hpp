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

#include "seqspace/config_io.hpp"
#include "seqspace/gallery.hpp"
#include "seqspace/weak.hpp"

namespace seqspace {

// Machine-readable certificate records. Keys appear in a fixed order and
// rationals serialize as strings, so identical inputs give byte-identical
// output.

Json to_json(const MembershipCertificate& c);
Json to_json(const InvariantAxiomReport& r);
Json to_json(const StrongInvarianceReport& r);
Json to_json(const MapPropertyReport& r);
Json to_json(const RankReport& r);
Json to_json(const CombinationCertificate& c);
Json to_json(const SeriesBoundReport& r);
Json to_json(const RegressionReport& r);
Json to_json(const WeakSupNorm& w);
/// Exact rational dual vectors plus the seed that generated the sampled ones.
Json to_json(const FunctionalFamily& f);

/// Wraps payloads in the envelope {tool, version, command, seed, payload}.
Json certificate_document(const std::string& command, uint64_t seed, Json payload);

std::string tool_version();

/// Two columns "n,value", one row per trace point.
std::string trace_csv(const std::vector<std::pair<uint64_t, double>>& trace);

}  // namespace seqspace
