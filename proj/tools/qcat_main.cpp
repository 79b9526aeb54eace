// Copyright 2026 The qcat authors
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

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcat/qcat.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitSuiteFailure = 3;

/// QCAT_SEED overrides the default seed 0; explicit --seed flags override both.
std::uint64_t env_seed_or_default() {
  const char* s = std::getenv("QCAT_SEED");
  if (s == nullptr || *s == '\0') return 0;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0') {
    throw std::invalid_argument("QCAT_SEED must be a base-10 unsigned integer");
  }
  return static_cast<std::uint64_t>(v);
}

double parse_real(const std::string& tok) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (errno != 0 || end == tok.c_str() || *end != '\0') {
    throw std::invalid_argument("expected a real number, got \"" + tok + "\"");
  }
  return v;
}

qcat::HamParams parse_triple(const std::string& spec) {
  std::vector<std::string> toks;
  std::string cur;
  for (const char ch : spec) {
    if (ch == ',') {
      toks.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  toks.push_back(cur);
  if (toks.size() != 3) {
    throw std::invalid_argument("expected three comma-separated reals, got \"" + spec + "\"");
  }
  return {parse_real(toks[0]), parse_real(toks[1]), parse_real(toks[2])};
}

int run_decompose(const std::string& path) {
  std::string text;
  Eigen::MatrixXcd m;
  try {
    text = qcat::read_text_file(path);
    m = qcat::parse_matrix_file(text);
    if (m.rows() != 4) throw std::invalid_argument("decompose expects a 4x4 matrix");
  } catch (const std::exception& e) {
    std::cerr << "decompose: " << e.what() << "\n";
    return kExitBadInput;
  }
  std::optional<qcat::UnitaryOp> u;
  try {
    u.emplace(m);
  } catch (const std::exception& e) {
    std::cerr << "decompose: input is not unitary: " << e.what() << "\n";
    return kExitNumerical;
  }
  const qcat::KakResult k = qcat::kak_decompose(*u);
  std::string out = "{\"c1\":" + qcat::format_double(k.params.c1);
  out += ",\"c2\":" + qcat::format_double(k.params.c2);
  out += ",\"c3\":" + qcat::format_double(k.params.c3);
  out += ",\"global_phase\":" + qcat::format_double(k.global_phase);
  out += ",\"residual\":" + qcat::format_double(k.residual);
  out += ",\"u\":" + qcat::matrix_file_json(k.u);
  out += ",\"v\":" + qcat::matrix_file_json(k.v);
  out += ",\"u_tilde\":" + qcat::matrix_file_json(k.u_tilde);
  out += ",\"v_tilde\":" + qcat::matrix_file_json(k.v_tilde);
  out += "}";
  std::cout << out << "\n";
  if (k.residual > qcat::tol::kak_residual) {
    std::cerr << "decompose: reassembly residual " << qcat::format_double(k.residual)
              << " exceeds " << qcat::format_double(qcat::tol::kak_residual) << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int run_catalysis(double c1, double c2, double c3, long trials, std::uint64_t seed) {
  const qcat::CatalysisReport rep =
      qcat::verify_catalysis(qcat::CanonicalParams(c1, c2, c3), trials, seed);
  std::string out = "{\"c1\":" + qcat::format_double(rep.params.c1);
  out += ",\"c2\":" + qcat::format_double(rep.params.c2);
  out += ",\"c3\":" + qcat::format_double(rep.params.c3);
  out += ",\"trials\":" + std::to_string(rep.trials);
  out += ",\"seed\":" + std::to_string(rep.seed);
  out += ",\"max_state_residual\":" + qcat::format_double(rep.max_state_residual);
  out += ",\"min_catalyst_fidelity\":" + qcat::format_double(rep.min_catalyst_fidelity);
  out += "}";
  std::cout << out << "\n";
  if (rep.max_state_residual > 1e-10) {
    std::cerr << "catalysis: state residual " << qcat::format_double(rep.max_state_residual)
              << " exceeds 1e-10\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int run_classify(const std::string& source, const std::string& target) {
  const qcat::HamParams h = parse_triple(source);
  const qcat::HamParams t = parse_triple(target);
  const qcat::SimulationVerdict v = qcat::classify_simulation(h, t);
  std::string witness = "{\"route\":\"" + qcat::json_escape(v.witness) + "\"";
  if (v.c4_interval.has_value()) {
    witness += ",\"c4_interval\":[" + qcat::format_double(v.c4_interval->first) + "," +
               qcat::format_double(v.c4_interval->second) + "]";
  }
  witness += "}";
  std::string out = "{\"kind\":\"" + std::string(qcat::to_string(v.kind)) + "\"";
  out += ",\"witness\":" + witness;
  out += ",\"notes\":[";
  out += "\"the third simulability inequality is checked as source c1+c2+c3 >= target c1+c2+c3\",";
  out += "\"the interaction cross-term pairs each partial trace with the matching outer Pauli index\"";
  out += "]}";
  std::cout << out << "\n";
  return kExitOk;
}

int run_nogo(double c1, double c2, long budget, std::uint64_t seed) {
  const qcat::NogoReport rep = qcat::nogo_search(c1, c2, budget, seed);
  std::string out = "{\"c1\":" + qcat::format_double(rep.c1);
  out += ",\"c2\":" + qcat::format_double(rep.c2);
  out += ",\"budget\":" + std::to_string(budget);
  out += ",\"samples\":" + std::to_string(rep.samples);
  out += ",\"seed\":" + std::to_string(rep.seed);
  out += ",\"min_over_xy_of_max_overlap\":" + qcat::format_double(rep.min_over_xy_of_max_overlap);
  out += ",\"bound\":" + qcat::format_double(rep.bound);
  out += ",\"witness_x\":" + qcat::matrix_file_json(rep.witness_x);
  out += ",\"witness_y\":" + qcat::matrix_file_json(rep.witness_y);
  out += "}";
  std::cout << out << "\n";
  return kExitOk;
}

int run_monotone(const std::string& state_path, const std::string& cut_spec) {
  const qcat::PureState s = qcat::parse_state_file(qcat::read_text_file(state_path));
  const qcat::Cut cut = qcat::parse_cut(cut_spec);
  const double p = qcat::max_schmidt_prob(s, cut);
  std::cout << "{\"cut\":\"" << qcat::json_escape(cut_spec)
            << "\",\"max_schmidt_prob\":" << qcat::format_double(p) << "}\n";
  return kExitOk;
}

int run_suite() {
  const std::uint64_t seed = env_seed_or_default();
  const std::vector<qcat::CriterionResult> results = qcat::run_all_criteria(seed);
  std::vector<std::string> lines;
  for (const auto& r : results) lines.push_back(qcat::format_criterion_line(r));

  // In-process determinism probe: replay the cheap criteria with the same
  // derived seeds and demand byte-identical lines. Cross-process byte
  // identity is checked by running this command twice.
  const auto seeds = qcat::derive_criterion_seeds(seed);
  const bool replay_ok =
      qcat::format_criterion_line(qcat::acceptance::criterion_bell_spectrum(seeds[1])) ==
          lines[1] &&
      qcat::format_criterion_line(qcat::acceptance::criterion_monotone_value(seeds[3])) ==
          lines[3] &&
      qcat::format_criterion_line(qcat::acceptance::criterion_verdicts(seeds[5])) == lines[5];
  qcat::CriterionResult det{9, "suite-determinism", replay_ok,
                            replay_ok ? "replay=byte-identical" : "replay=mismatch"};
  lines.push_back(qcat::format_criterion_line(det));

  bool all = det.pass;
  for (const auto& r : results) all = all && r.pass;
  for (const auto& l : lines) std::cout << l << "\n";
  std::cout << "result: " << (all ? "PASS" : "FAIL") << " ("
            << std::count_if(lines.begin(), lines.end(),
                             [](const std::string& l) {
                               return l.find(" PASS ") != std::string::npos;
                             })
            << "/9)\n";
  return all ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit canonical forms, entanglement catalysis, and interaction simulation"};
  app.require_subcommand(1);

  std::uint64_t default_seed = 0;
  try {
    default_seed = env_seed_or_default();
  } catch (const std::exception& e) {
    std::cerr << "qcat: " << e.what() << "\n";
    return kExitBadInput;
  }

  auto* dec = app.add_subcommand(
      "decompose", "Split a two-qubit unitary into local factors and a canonical core");
  std::string in_path;
  dec->add_option("--in", in_path, "MatrixFile JSON path")->required();

  auto* cat = app.add_subcommand(
      "catalysis", "Verify the paired-ancilla circuit identity on random states");
  double cat_c1 = 0.0, cat_c2 = 0.0, cat_c3 = 0.0;
  long cat_trials = 100;
  std::uint64_t cat_seed = default_seed;
  cat->add_option("--c1", cat_c1, "first canonical parameter")->required();
  cat->add_option("--c2", cat_c2, "second canonical parameter")->required();
  cat->add_option("--c3", cat_c3, "third canonical parameter")->required();
  cat->add_option("--trials", cat_trials, "number of random trial states (>= 1)");
  cat->add_option("--seed", cat_seed, "RNG seed");

  auto* cls = app.add_subcommand(
      "classify", "Order two interaction triples under local and catalytic simulation");
  std::string cls_source, cls_target;
  cls->add_option("--source", cls_source, "source triple c1,c2,c3")->required();
  cls->add_option("--target", cls_target, "target triple c1,c2,c3")->required();

  auto* nogo = app.add_subcommand(
      "nogo", "Search local pre/post operations for a product overlap below the floor");
  double nogo_c1 = 0.0, nogo_c2 = 0.0;
  long nogo_budget = 2000;
  std::uint64_t nogo_seed = default_seed;
  nogo->add_option("--c1", nogo_c1, "first canonical parameter")->required();
  nogo->add_option("--c2", nogo_c2, "second canonical parameter")->required();
  nogo->add_option("--budget", nogo_budget, "overlap evaluation budget (>= 1)");
  nogo->add_option("--seed", nogo_seed, "RNG seed");

  auto* mono = app.add_subcommand("monotone", "Largest squared Schmidt coefficient across a cut");
  std::string mono_state, mono_cut;
  mono->add_option("--state", mono_state, "StateFile JSON path")->required();
  mono->add_option("--cut", mono_cut, "bipartition, e.g. \"A,a|B,b\"")->required();

  app.add_subcommand("suite", "Run the full acceptance battery and print a pass/fail table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (dec->parsed()) return run_decompose(in_path);
    if (cat->parsed()) return run_catalysis(cat_c1, cat_c2, cat_c3, cat_trials, cat_seed);
    if (cls->parsed()) return run_classify(cls_source, cls_target);
    if (nogo->parsed()) return run_nogo(nogo_c1, nogo_c2, nogo_budget, nogo_seed);
    if (mono->parsed()) return run_monotone(mono_state, mono_cut);
    return run_suite();
  } catch (const std::exception& e) {
    std::cerr << app.get_subcommands().front()->get_name() << ": " << e.what() << "\n";
    return kExitBadInput;
  }
}
