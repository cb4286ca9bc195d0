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
//
// Batch front-end: parse configs, run probes / axiom checks / constructions,
// emit human reports on stdout and machine-readable certificates on request.
// Inputs come from flags, or from a JSON config file with flags overriding.
//
// Exit codes: 0 verified/pass, 1 refuted/violation found, 2 inconclusive at
// budget, 3 usage or config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "seqspace/report_io.hpp"

namespace {

using namespace seqspace;

constexpr int kExitPass = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct CommonOpts {
  std::string config_path;
  std::string json_path;
  std::string csv_path;
  std::string mode = "rational";
  uint64_t budget = 100'000;
  double threshold = 1'000.0;
  uint64_t truncate = 1'000;
  uint64_t seed = 0;
  Json config = Json::object();
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--config", c.config_path, "JSON config file; flags override its fields");
  cmd->add_option("--json", c.json_path, "write the certificate document to this path");
  cmd->add_option("--csv", c.csv_path, "write an (n,value) partial-norm trace to this path");
  cmd->add_option("--mode", c.mode, "scalar mode: rational (default) | float | complex");
  cmd->add_option("--budget", c.budget, "probe budget in coordinates (default 100000)");
  cmd->add_option("--threshold", c.threshold, "divergence threshold in norm units (default 1000)");
  cmd->add_option("--truncate", c.truncate, "prefix length for coordinatewise checks (default 1000)");
  cmd->add_option("--seed", c.seed, "seed for sampled functionals (default 0)");
}

void load_config(CLI::App* cmd, CommonOpts& c) {
  if (c.config_path.empty()) return;
  std::ifstream f(c.config_path);
  if (!f) throw ConfigError("cannot open config file " + c.config_path);
  try {
    c.config = Json::parse(f);
  } catch (const std::exception& e) {
    throw ConfigError("config file: " + std::string(e.what()));
  }
  if (!c.config.is_object()) throw ConfigError("config file must hold a JSON object");
  // Flags win; unset scalars fall back to config values.
  auto unset = [&](const char* flag) { return cmd->count(flag) == 0; };
  if (unset("--mode") && c.config.contains("mode"))
    c.mode = c.config.at("mode").get<std::string>();
  if (unset("--budget") && c.config.contains("budget"))
    c.budget = c.config.at("budget").get<uint64_t>();
  if (unset("--threshold") && c.config.contains("threshold"))
    c.threshold = c.config.at("threshold").get<double>();
  if (unset("--truncate") && c.config.contains("truncate"))
    c.truncate = c.config.at("truncate").get<uint64_t>();
  if (unset("--seed") && c.config.contains("seed"))
    c.seed = c.config.at("seed").get<uint64_t>();
}

ScalarField field_of(const CommonOpts& c) {
  ScalarField f;
  if (c.mode == "rational")
    f.mode = ScalarMode::RealRational;
  else if (c.mode == "float")
    f.mode = ScalarMode::RealFloat;
  else if (c.mode == "complex")
    f.mode = ScalarMode::ComplexFloat;
  else
    throw ConfigError("unknown mode '" + c.mode + "'");
  return f;
}

ProbeOptions probe_options(const CommonOpts& c) {
  ProbeOptions o;
  o.budget = c.budget;
  o.threshold = c.threshold;
  o.truncation = c.truncate;
  return o;
}

// Flag token first, config field second.
const Json* config_field(const CommonOpts& c, const char* key) {
  if (c.config.contains(key)) return &c.config.at(key);
  return nullptr;
}

SpaceSpec resolve_space(const CommonOpts& c, const std::string& tok, const char* key) {
  if (!tok.empty()) return parse_space_token(tok);
  if (const Json* j = config_field(c, key)) return parse_space_any(*j);
  throw ConfigError(std::string("missing --") + key + " (flag or config field)");
}

MapSpec resolve_map(const CommonOpts& c, const std::string& tok) {
  if (!tok.empty()) return parse_map_token(tok);
  if (const Json* j = config_field(c, "map")) return parse_map_any(*j);
  return MapSpec::identity();
}

Sequence resolve_sequence(const CommonOpts& c, const std::string& tok, const char* key) {
  if (!tok.empty()) return parse_sequence_token(tok, field_of(c));
  if (const Json* j = config_field(c, key)) return parse_sequence_any(*j, field_of(c));
  throw ConfigError(std::string("missing --") + key + " (flag or config field)");
}

NestedFamily resolve_family(const CommonOpts& c, const std::string& tok) {
  if (!tok.empty()) return parse_family_token(tok);
  if (const Json* j = config_field(c, "family")) return parse_family_any(*j);
  throw ConfigError("missing --family (flag or config field)");
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<Scalar> resolve_coeffs(const CommonOpts& c, const std::string& tok,
                                   bool required) {
  std::vector<std::string> parts;
  if (!tok.empty()) {
    parts = split_list(tok, ',');
  } else if (const Json* j = config_field(c, "coeffs")) {
    if (!j->is_array()) throw ConfigError("config: coeffs must be an array");
    for (const auto& e : *j)
      parts.push_back(e.is_string() ? e.get<std::string>()
                                    : std::to_string(e.get<long>()));
  }
  if (parts.empty()) {
    if (required) throw ConfigError("missing --coeffs (flag or config field)");
    return {};
  }
  const ScalarField field = field_of(c);
  std::vector<Scalar> out;
  for (const auto& p : parts) {
    const Rational r = Rational::parse(p);
    out.push_back(field.exact() ? Scalar::rational(r) : Scalar::real(r.to_double()));
  }
  return out;
}

void write_outputs(const CommonOpts& c, const std::string& command, Json payload,
                   const std::vector<std::pair<uint64_t, double>>& trace = {}) {
  if (!c.json_path.empty()) {
    std::ofstream f(c.json_path);
    if (!f) throw ConfigError("cannot open " + c.json_path);
    f << certificate_document(command, c.seed, std::move(payload)).dump(2) << "\n";
  }
  if (!c.csv_path.empty()) {
    std::ofstream f(c.csv_path);
    if (!f) throw ConfigError("cannot open " + c.csv_path);
    f << trace_csv(trace);
  }
}

IndexSet parse_pattern(const std::string& token) {
  if (token == "odds") return IndexSet::odds();
  if (token == "evens") return IndexSet::evens();
  if (token.rfind("ray:", 0) == 0)
    return IndexSet::dyadic_ray(static_cast<uint32_t>(std::stoul(token.substr(4))));
  if (token.rfind("ap:", 0) == 0) {
    const auto parts = split_list(token.substr(3), '/');
    if (parts.size() != 2) throw ConfigError("ap pattern: ap:stride/offset");
    return IndexSet::arithmetic(std::stoull(parts[0]), std::stoll(parts[1]));
  }
  throw ConfigError("unknown pattern '" + token + "' (odds|evens|ray:i|ap:c/d)");
}

int verdict_exit(Verdict v) {
  return v == Verdict::Inconclusive ? kExitInconclusive : kExitPass;
}

// Exact rationals can be thousands of digits; previews fall back to doubles.
std::string preview_value(const Value& v) {
  const std::string s = v.str();
  if (s.size() <= 14) return s;
  if (v.is_vector()) return "(...)";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v.as_scalar().to_double());
  return std::string(buf) + "~";
}

// ---- probe ----------------------------------------------------------------

int run_probe(const CommonOpts& c, const std::string& space_tok, const std::string& seq_tok) {
  const SpaceSpec space = resolve_space(c, space_tok, "space");
  const Sequence seq = resolve_sequence(c, seq_tok, "seq");
  const MembershipCertificate cert = decide_membership(space, seq, probe_options(c));
  std::cout << "probe: " << seq.describe() << " vs " << space.describe() << "\n"
            << "  verdict: " << to_string(cert.verdict) << " (" << to_string(cert.method)
            << ")\n  rule: " << cert.rule << "\n";
  if (cert.exact_value) std::cout << "  exact value: " << cert.exact_value->str() << "\n";
  const auto trace = partial_norm_trace(space, seq, c.truncate);
  write_outputs(c, "probe", to_json(cert), trace);
  return verdict_exit(cert.verdict);
}

// ---- axioms ---------------------------------------------------------------

int run_axioms(const CommonOpts& c, const std::string& space_tok,
               const std::string& samples_tok, const std::string& patterns_tok) {
  const SpaceSpec space = resolve_space(c, space_tok, "space");
  std::vector<Sequence> samples;
  for (const auto& tok : split_list(samples_tok, ';'))
    samples.push_back(parse_sequence_token(tok, field_of(c)));
  if (samples.empty()) {
    if (const Json* j = config_field(c, "samples"); j && j->is_array())
      for (const auto& e : *j) samples.push_back(parse_sequence_any(e, field_of(c)));
  }
  if (samples.empty()) throw ConfigError("axioms: no samples given");
  std::vector<IndexSet> patterns;
  for (const auto& tok : split_list(patterns_tok, ','))
    patterns.push_back(parse_pattern(tok));
  if (patterns.empty()) patterns.push_back(IndexSet::odds());

  const auto inv = check_invariant_axioms(space, samples, c.truncate, probe_options(c));
  const auto strong =
      check_strongly_invariant(space, samples, patterns, c.truncate, probe_options(c));

  std::cout << "axioms for " << space.describe() << " on " << samples.size()
            << " sample(s), truncation " << c.truncate << "\n";
  std::cout << "  invariant axioms: " << (inv.passed ? "pass" : "FAIL")
            << " (K estimate " << inv.K_estimate << ")\n";
  std::cout << "  strongly invariant: " << (strong.passed ? "pass" : "VIOLATIONS") << "\n";
  for (const auto& v : strong.violations) {
    std::cout << "    witness: " << v.sample;
    if (!v.pattern.empty()) std::cout << " along " << v.pattern;
    std::cout << " -- " << v.reason << "\n";
  }

  Json payload;
  payload["invariant"] = to_json(inv);
  payload["strongly_invariant"] = to_json(strong);
  write_outputs(c, "axioms", std::move(payload));
  return inv.passed && strong.passed ? kExitPass : kExitRefuted;
}

// ---- construct / verify -----------------------------------------------------

GeneratedSubspace make_subspace(const CommonOpts& c, const std::string& space_tok,
                                const std::string& map_tok, const std::string& family_tok,
                                const std::string& mother_tok) {
  TargetSpec target{resolve_space(c, space_tok, "space"), resolve_map(c, map_tok),
                    resolve_family(c, family_tok)};
  Sequence mother = resolve_sequence(c, mother_tok, "mother");
  return GeneratedSubspace::build(std::move(mother), std::move(target), probe_options(c));
}

int run_construct(const CommonOpts& c, const std::string& space_tok,
                  const std::string& map_tok, const std::string& family_tok,
                  const std::string& mother_tok, uint32_t rank_k, uint32_t preview) {
  const GeneratedSubspace sub =
      make_subspace(c, space_tok, map_tok, family_tok, mother_tok);

  std::cout << "constructed subspace through " << sub.mother().describe() << " in "
            << sub.target().describe() << "\n";
  std::cout << "  series exponent s~ = " << sub.series_exponent().str() << "\n";
  std::cout << "  half: " << sub.partition().block(1).describe() << " ("
            << sub.half_certificate().rule << ")\n";
  std::cout << "  partition:\n";
  for (uint32_t i = 1; i <= 5; ++i) {
    const IndexSet b = sub.partition().block(i);
    std::cout << "    N" << i << " = " << b.describe() << " = {";
    for (uint64_t m = 1; m <= 5; ++m) std::cout << (m > 1 ? "," : "") << b.enumerate(m);
    std::cout << ",...}\n";
  }
  std::cout << "  basis preview (first 8 coordinates):\n";
  for (uint32_t i = 1; i <= preview; ++i) {
    std::cout << "    y" << i << ":";
    const Sequence yi = sub.basis(i);
    for (uint64_t j = 1; j <= 8; ++j) std::cout << " " << preview_value(yi.eval(j));
    std::cout << "\n";
  }
  const RankReport rank = verify_independence(sub, rank_k, c.truncate);
  std::cout << "  independence: rank " << rank.rank << " of k = " << rank.k
            << " (truncation " << rank.n_effective << ")"
            << (rank.full_rank ? "" : "  [NOT FULL]") << "\n";

  Json payload;
  payload["target"] = sub.target().describe();
  payload["series_exponent"] = sub.series_exponent().str();
  payload["half"] = sub.partition().block(1).describe();
  Json adm = Json::array();
  for (const auto& a : sub.admission()) adm.push_back(to_json(a));
  payload["admission"] = std::move(adm);
  payload["half_certificate"] = to_json(sub.half_certificate());
  payload["rank"] = to_json(rank);
  const auto trace = partial_norm_trace(sub.target().ambient, sub.mother(),
                                        std::min<uint64_t>(c.truncate, 4096));
  write_outputs(c, "construct", std::move(payload), trace);
  return rank.full_rank ? kExitPass : kExitRefuted;
}

int run_verify(const CommonOpts& c, const std::string& space_tok, const std::string& map_tok,
               const std::string& family_tok, const std::string& mother_tok,
               const std::string& coeffs_tok, uint64_t bound_terms) {
  const GeneratedSubspace sub =
      make_subspace(c, space_tok, map_tok, family_tok, mother_tok);
  const std::vector<Scalar> coeffs = resolve_coeffs(c, coeffs_tok, /*required=*/true);

  const CombinationCertificate cert = verify_membership(sub, coeffs, probe_options(c));
  std::cout << "combination case: " << cert.describe_case() << "\n";
  if (cert.escaping_subsequence)
    std::cout << "  escaping subsequence: " << cert.escaping_subsequence->describe() << "\n";
  for (const auto& m : cert.per_member)
    std::cout << "  " << m.space << ": " << to_string(m.verdict) << " -- " << m.rule << "\n";
  if (cert.combination_case != CombinationCertificate::Case::AllZero)
    std::cout << "  lift: " << cert.lift << "\n";

  Json payload = to_json(cert);
  if (sub.target().ambient.is_lp()) {
    const auto bound = series_bound_check(sub, coeffs, bound_terms);
    std::cout << "  series bound (s~ = " << bound.stilde.str() << "): lhs " << bound.lhs
              << " vs rhs " << bound.rhs << (bound.exact_equal ? " (exact equality)" : "")
              << (bound.holds ? "" : "  [VIOLATED]") << "\n";
    Json combined;
    combined["membership"] = std::move(payload);
    combined["series_bound"] = to_json(bound);
    payload = std::move(combined);
  }
  write_outputs(c, "verify", std::move(payload));
  if (cert.combination_case == CombinationCertificate::Case::AllZero) return kExitPass;
  if (cert.inconclusive) return kExitInconclusive;
  return cert.all_out ? kExitPass : kExitRefuted;
}

// ---- weak -------------------------------------------------------------------

int run_weak(const CommonOpts& c, const std::string& space_tok, const std::string& map_tok,
             const std::string& family_tok, const std::string& mother_tok, uint32_t dim,
             uint32_t axis, uint32_t functionals, const std::string& coeffs_tok) {
  VectorSpaceSpec y{dim, std::nullopt};  // sup-norm stand-in for Y
  const FunctionalFamily fam = FunctionalFamily::for_space(y, functionals, c.seed);
  const Sequence scalar_mother = resolve_sequence(c, mother_tok, "mother");
  Sequence mother = axis_sequence(scalar_mother, axis, y);

  const NestedFamily parsed_family = resolve_family(c, family_tok);
  std::vector<SpaceSpec> family = parsed_family.members();

  const GeneratedSubspace sub =
      generate_weak(std::move(mother), resolve_space(c, space_tok, "space"),
                    resolve_map(c, map_tok), std::move(family), fam, probe_options(c));

  std::cout << "weak pipeline over Y = " << y.describe() << " with " << fam.describe()
            << "\n";
  std::cout << "  half: " << sub.partition().block(1).describe() << "\n";
  std::cout << "  " << sub.half_certificate().rule << "\n";

  Json payload;
  // Truncated weak sup norm of the mother against the largest lp member.
  const SpaceSpec& largest = parsed_family.largest();
  if (largest.is_lp() && !largest.infinite_p() && !(largest.p() < Rational(1))) {
    const auto wsn = weak_sup_norm(WeakSpec{largest, y}, sub.mother(), fam,
                                   std::min<uint64_t>(c.truncate, 256));
    std::cout << "  weak sup norm vs " << largest.describe() << " (n = "
              << std::min<uint64_t>(c.truncate, 256) << "): " << wsn.value
              << (wsn.exact_over_ball ? " (exact over the dual ball)" : " (sampled)")
              << "\n";
    payload["weak_sup_norm"] = to_json(wsn);
  }
  payload["functional_family"] = to_json(fam);
  payload["half_certificate"] = to_json(sub.half_certificate());
  Json adm = Json::array();
  for (const auto& a : sub.admission()) adm.push_back(to_json(a));
  payload["admission"] = std::move(adm);

  int exit_code = kExitPass;
  const std::vector<Scalar> coeffs = resolve_coeffs(c, coeffs_tok, /*required=*/false);
  if (!coeffs.empty()) {
    const CombinationCertificate cert = verify_membership(sub, coeffs, probe_options(c));
    std::cout << "  combination case: " << cert.describe_case()
              << "; all members out: " << (cert.all_out ? "yes" : "no") << "\n";
    payload["combination"] = to_json(cert);
    if (cert.inconclusive)
      exit_code = kExitInconclusive;
    else if (!cert.all_out &&
             cert.combination_case != CombinationCertificate::Case::AllZero)
      exit_code = kExitRefuted;
  }
  write_outputs(c, "weak", std::move(payload));
  return exit_code;
}

// ---- gallery -----------------------------------------------------------------

int run_gallery(const CommonOpts& c, const std::string& which) {
  std::vector<RegressionReport> reports;
  if (which == "kernel" || which == "all") reports.push_back(kernel_space_counterexample());
  if (which == "finite-dim" || which == "all")
    reports.push_back(finite_dim_pointwise_failure());
  if (which == "catalog" || which == "all") {
    RegressionReport r;
    r.name = "mother-catalog";
    r.passed = true;
    for (const char* p : {"1/2", "1", "2"}) {
      const Rational pp = Rational::parse(p);
      const std::vector<Rational> gamma{pp / Rational(2), pp * Rational(3, 4)};
      const auto mothers = mother_vector_catalog(pp, gamma, field_of(c));
      r.findings.push_back("[ok] p = " + pp.str() + ": " + std::to_string(mothers.size()) +
                           " certified mothers (primary " + mothers[0].describe() + ")");
    }
    reports.push_back(std::move(r));
  }
  if (reports.empty())
    throw ConfigError("gallery: expected kernel | finite-dim | catalog | all");

  bool all_passed = true;
  Json payload = Json::array();
  for (const auto& r : reports) {
    std::cout << "regression " << r.name << ": " << (r.passed ? "pass" : "FAIL") << "\n";
    for (const auto& f : r.findings) std::cout << "  " << f << "\n";
    all_passed = all_passed && r.passed;
    payload.push_back(to_json(r));
  }
  write_outputs(c, "gallery", std::move(payload));
  return all_passed ? kExitPass : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "seqspace: constructive verification of subspaces through a mother vector in "
      "sequence spaces"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  CommonOpts c;
  std::string space_tok, seq_tok, map_tok, family_tok, mother_tok;
  std::string samples_tok, patterns_tok = "odds,evens", coeffs_tok, gallery_which = "all";
  uint32_t rank_k = 8, preview = 3, dim = 2, axis = 0, functionals = 32;
  uint64_t bound_terms = 64;

  auto* probe = app.add_subcommand("probe", "membership certificate for (space, sequence)");
  probe->add_option("--space", space_tok, "space token, e.g. lp:1");
  probe->add_option("--seq", seq_tok, "sequence token, e.g. powlog:1,0");
  add_common(probe, c);

  auto* axioms =
      app.add_subcommand("axioms", "invariant / strongly-invariant axiom reports");
  axioms->add_option("--space", space_tok);
  axioms->add_option("--samples", samples_tok, "semicolon-separated sequence tokens");
  axioms->add_option("--patterns", patterns_tok, "comma-separated: odds|evens|ray:i|ap:c/d");
  add_common(axioms, c);

  auto* construct = app.add_subcommand(
      "construct", "build the generated subspace and report partition, basis, rank");
  construct->add_option("--space", space_tok, "ambient space E");
  construct->add_option("--map", map_tok, "map f (default identity)");
  construct->add_option("--family", family_tok, "nested family, e.g. lp:1,lp:1.5");
  construct->add_option("--mother", mother_tok, "mother vector token");
  construct->add_option("--rank-k", rank_k, "independence check size (default 8)");
  construct->add_option("--basis-preview", preview, "basis vectors to preview (default 3)");
  add_common(construct, c);

  auto* verify =
      app.add_subcommand("verify", "membership certificate for a coefficient vector");
  verify->add_option("--space", space_tok);
  verify->add_option("--map", map_tok);
  verify->add_option("--family", family_tok);
  verify->add_option("--mother", mother_tok);
  verify->add_option("--coeffs", coeffs_tok, "comma-separated coefficients, e.g. 1,0,2");
  verify->add_option("--bound-terms", bound_terms,
                     "nonzero terms per basis vector in the series bound (default 64)");
  add_common(verify, c);

  auto* weak = app.add_subcommand("weak", "weak-variant pipeline over Y = K^d");
  weak->add_option("--space", space_tok, "ambient space E");
  weak->add_option("--map", map_tok);
  weak->add_option("--family", family_tok, "scalar family F_lambda");
  weak->add_option("--mother", mother_tok, "scalar mother, placed on --axis");
  weak->add_option("--dim", dim, "dimension of Y (default 2)");
  weak->add_option("--axis", axis, "axis carrying the mother (default 0)");
  weak->add_option("--functionals", functionals, "sampled functionals (default 32)");
  weak->add_option("--coeffs", coeffs_tok, "optional combination to verify");
  add_common(weak, c);

  auto* gallery = app.add_subcommand("gallery", "named regressions");
  gallery->add_option("which", gallery_which, "kernel | finite-dim | catalog | all");
  add_common(gallery, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    load_config(active, c);
    if (probe->parsed()) return run_probe(c, space_tok, seq_tok);
    if (axioms->parsed()) return run_axioms(c, space_tok, samples_tok, patterns_tok);
    if (construct->parsed())
      return run_construct(c, space_tok, map_tok, family_tok, mother_tok, rank_k, preview);
    if (verify->parsed())
      return run_verify(c, space_tok, map_tok, family_tok, mother_tok, coeffs_tok,
                        bound_terms);
    if (weak->parsed())
      return run_weak(c, space_tok, map_tok, family_tok, mother_tok, dim, axis, functionals,
                      coeffs_tok);
    if (gallery->parsed()) return run_gallery(c, gallery_which);
  } catch (const NotAdmissible& e) {
    std::cerr << "refuted: " << e.what() << "\n";
    return kExitRefuted;
  } catch (const InconclusiveSplit& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const BudgetExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SeqspaceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
