// Copyright 2026 The qecv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qecv: verify, simulate, suite, bench, corpus emit.
//
// Exit codes: 0 verified / success, 1 refuted / failures, 2 inconclusive,
// 3 input error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qecv/corpus.hpp"
#include "qecv/error.hpp"
#include "qecv/hoare.hpp"
#include "qecv/oracle.hpp"
#include "qecv/scaling.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace qecv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInput = 3;

struct RunConfig {
  int oracle_cap = kDefaultOracleCap;
  int unroll_cap = 64;
  double tol = 1e-9;
  int samples = 100;
  std::uint64_t seed = 0;
  std::size_t max_terms = kDefaultMaxTerms;
  std::string format = "json";
  std::string out;
  std::vector<std::string> decoder_dirs;

  VerifyConfig verify() const {
    VerifyConfig v;
    v.imply.oracle_cap = oracle_cap;
    v.imply.max_terms = max_terms;
    v.imply.tol = tol;
    return v;
  }
  OracleCheckConfig oracle() const {
    OracleCheckConfig o;
    o.samples = samples;
    o.seed = seed;
    o.tol = tol;
    o.oracle_cap = oracle_cap;
    o.unroll_cap = unroll_cap;
    return o;
  }
};

void add_common(CLI::App *cmd, RunConfig &rc) {
  cmd->add_option("--oracle-cap", rc.oracle_cap, "Largest qubit count for dense checks")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--unroll", rc.unroll_cap, "Loop unroll cap for the dense interpreter")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", rc.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--samples", rc.samples, "Oracle samples per triple")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", rc.seed, "Sampling seed");
  cmd->add_option("--max-terms", rc.max_terms, "Pauli-sum term cap")->check(CLI::PositiveNumber);
  cmd->add_option("--format", rc.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", rc.out, "Write the report here instead of stdout");
}

void emit(const RunConfig &rc, const std::string &text) {
  if (rc.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(rc.out);
  if (!f) throw InputError("cannot write '" + rc.out + "'");
  f << text;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Registry decoders named by `p`'s bindings: loaded from the decoder
/// directories, or generated for rep<d>_lookup.
std::map<std::string, ProgramUnit> resolve_registry(const ProgramUnit &p,
                                                    const std::vector<std::string> &dirs) {
  std::map<std::string, ProgramUnit> reg;
  static const std::regex rep_name(R"(rep(\d+)_lookup)");
  for (const auto &[site, name] : p.decoder_bindings) {
    if (name == kAxiomatic || name == kLookup || reg.count(name)) continue;
    bool found = false;
    for (const auto &d : dirs) {
      const fs::path f = fs::path(d) / (name + ".qecv");
      if (fs::exists(f)) {
        reg[name] = parse_program(read_file(f.string()));
        found = true;
        break;
      }
    }
    std::smatch m;
    if (!found && std::regex_match(name, m, rep_name)) {
      reg[name] = repetition_decoder(std::stoi(m[1]));
    }
  }
  return reg;
}

int exit_for(VerificationOutcome::Status s) {
  switch (s) {
    case VerificationOutcome::Status::Verified: return kExitOk;
    case VerificationOutcome::Status::Refuted: return kExitRefuted;
    case VerificationOutcome::Status::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string &path, RunConfig rc) {
  const Triple t = load_triple(path);
  const auto dir = fs::path(path).parent_path();
  rc.decoder_dirs.push_back(((dir.empty() ? fs::path(".") : dir) / "decoders").string());
  auto cfg = rc.verify();
  cfg.registry = resolve_registry(t.program, rc.decoder_dirs);
  const auto o = verify_triple(t, cfg);

  json witness;
  if (o.status == VerificationOutcome::Status::Refuted && t.program.n_qubits <= rc.oracle_cap) {
    auto oc = rc.oracle();
    oc.registry = cfg.registry;
    try {
      const auto rep = oracle_check(t, oc);
      if (!rep.failures.empty()) {
        witness = {{"sample", rep.failures.front().sample},
                   {"seed", rc.seed},
                   {"reason", rep.failures.front().reason}};
      }
    } catch (const Error &e) {
      witness = {{"error", e.what()}};
    }
  }
  if (rc.format == "text") {
    std::string text = report_text(t, o);
    if (!witness.is_null()) text += "oracle witness: " + witness.dump() + "\n";
    emit(rc, text);
  } else {
    auto j = json::parse(report_json(t, o));
    if (!witness.is_null()) j["witness"] = witness;
    emit(rc, j.dump(2));
  }
  return exit_for(o.status);
}

std::string bits_of(Eigen::Index i, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if ((i >> q) & 1) s[static_cast<std::size_t>(n - 1 - q)] = '1';
  }
  return s;
}

json branch_json(const MachineState &b, int n, double tol) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < b.rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < b.rho.cols(); ++c) {
      const auto v = b.rho(r, c);
      if (std::abs(v) > tol) entries.push_back({bits_of(r, n), bits_of(c, n), v.real(), v.imag()});
    }
  }
  json sigma = json::object();
  for (const auto &[k, v] : b.sigma) sigma[k] = v.is_identity() ? "I" : to_string(v);
  return {{"weight", b.rho.trace().real()},
          {"sigma", sigma},
          {"rho_digest", rho_digest(b.rho)},
          {"entries", entries}};
}

int cmd_simulate(const std::string &path, const std::string &init, const std::string &sigma_text,
                 bool denotational, RunConfig rc) {
  auto p = parse_program(read_file(path));
  const auto dir = fs::path(path).parent_path();
  rc.decoder_dirs.push_back(((dir.empty() ? fs::path(".") : dir) / "decoders").string());
  p = expand_correct(p, resolve_registry(p, rc.decoder_dirs), true);
  if (p.n_qubits > rc.oracle_cap) {
    throw OracleCapExceeded(std::to_string(p.n_qubits) + " qubits exceed the cap of " +
                            std::to_string(rc.oracle_cap));
  }
  const std::string bits = init.empty() ? std::string(static_cast<std::size_t>(p.n_qubits), '0')
                                        : init;
  if (static_cast<int>(bits.size()) != p.n_qubits ||
      bits.find_first_not_of("01") != std::string::npos) {
    throw InputError("--init needs " + std::to_string(p.n_qubits) + " binary digits");
  }
  Sigma sigma;
  if (!sigma_text.empty()) {
    const auto t = parse_triple("pre: TRUE\npost: TRUE\nsigma: " + sigma_text + "\nprogram:\n  skip\n");
    sigma = t.sigma;
  }
  OracleConfig oc;
  oc.oracle_cap = rc.oracle_cap;
  oc.unroll_cap = rc.unroll_cap;
  oc.tol = rc.tol;
  oc.record_trace = true;
  const auto init_state = basis_state(bits, sigma);
  const auto r = denotational ? run_denotational(p, init_state, oc) : run_program(p, init_state, oc);

  if (rc.format == "text") {
    std::ostringstream os;
    for (const auto &e : r.trace) {
      os << std::setw(4) << e.step << "  " << std::left << std::setw(12) << e.rule << std::right
         << " w=" << e.weight << "  " << e.stmt << "\n";
    }
    os << r.branches.size() << " terminal branch(es)\n";
    for (const auto &b : r.branches) {
      os << "  weight " << b.rho.trace().real() << "  sigma " << to_string(b.sigma) << "\n";
      const auto bj = branch_json(b, p.n_qubits, 1e-12);
      for (const auto &e : bj["entries"]) {
        os << "    |" << e[0].get<std::string>() << "><" << e[1].get<std::string>()
           << "| = " << e[2].get<double>();
        if (e[3].get<double>() != 0.0) os << " + " << e[3].get<double>() << "i";
        os << "\n";
      }
    }
    if (r.inconclusive(rc.tol)) os << "residual mass " << r.residual_mass() << "\n";
    emit(rc, os.str());
  } else {
    json j;
    j["program"] = p.name;
    j["init"] = bits;
    j["semantics"] = denotational ? "denotational" : "operational";
    json trace = json::array();
    std::istringstream lines(trace_jsonl(r));
    for (std::string l; std::getline(lines, l);) {
      if (!l.empty()) trace.push_back(json::parse(l));
    }
    j["trace"] = trace;
    j["branches"] = json::array();
    for (const auto &b : r.branches) j["branches"].push_back(branch_json(b, p.n_qubits, 1e-12));
    j["residual_mass"] = r.residual_mass();
    emit(rc, j.dump(2));
  }
  return r.inconclusive(rc.tol) ? kExitInconclusive : kExitOk;
}

struct TripleResult {
  std::string name, tag, status, detail, oracle;
  double seconds = 0.0;
  bool ok = false;
};

int cmd_suite(const std::string &filter, bool no_oracle, const RunConfig &rc) {
  std::vector<CaseStudy> cases;
  for (auto &c : golden_suite()) {
    bool keep = filter.empty() || c.name.find(filter) != std::string::npos ||
                c.family.find(filter) != std::string::npos;
    if (!keep) {
      std::erase_if(c.triples, [&](const Triple &t) {
        return t.name.find(filter) == std::string::npos && t.tag.find(filter) == std::string::npos;
      });
      keep = !c.triples.empty();
    }
    if (keep) cases.push_back(std::move(c));
  }
  std::vector<std::vector<TripleResult>> results(cases.size());
  const auto start = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto &c = cases[i];
    auto cfg = rc.verify();
    cfg.registry = c.registry;
    for (const auto &t : c.triples) {
      TripleResult r{t.name, t.tag, "", "", "-", 0.0, false};
      const auto o = verify_triple(t, cfg);
      r.status = to_string(o.status);
      r.detail = o.detail;
      r.seconds = o.seconds;
      r.ok = o.status == VerificationOutcome::Status::Verified;
      if (r.ok && !no_oracle && c.oracle_eligible && c.program.n_qubits <= rc.oracle_cap) {
        auto oc = rc.oracle();
        oc.registry = c.registry;
        try {
          const auto rep = oracle_check(t, oc);
          r.oracle = std::to_string(rep.passed) + "/" + std::to_string(rep.samples);
          r.ok = rep.ok();
        } catch (const UnsatisfiableAssertion &) {
          r.oracle = "vacuous";
        }
      }
      results[i].push_back(std::move(r));
    }
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int n = 0, ok = 0;
  for (const auto &rs : results) {
    for (const auto &r : rs) {
      ++n;
      ok += r.ok;
    }
  }
  if (rc.format == "text") {
    std::ostringstream os;
    os << std::left << std::setw(26) << "tag" << std::setw(30) << "triple" << std::setw(14)
       << "status" << std::setw(10) << "oracle" << "seconds\n";
    for (const auto &rs : results) {
      for (const auto &r : rs) {
        os << std::setw(26) << r.tag << std::setw(30) << r.name << std::setw(14) << r.status
           << std::setw(10) << r.oracle << std::fixed << std::setprecision(4) << r.seconds;
        if (!r.detail.empty()) os << "  " << r.detail;
        os << "\n";
      }
    }
    os << ok << "/" << n << " passed in " << std::setprecision(2) << total << " s\n";
    emit(rc, os.str());
  } else {
    json j;
    j["triples"] = json::array();
    for (const auto &rs : results) {
      for (const auto &r : rs) {
        j["triples"].push_back({{"tag", r.tag},
                                {"name", r.name},
                                {"status", r.status},
                                {"detail", r.detail},
                                {"oracle", r.oracle},
                                {"seconds", r.seconds},
                                {"pass", r.ok}});
      }
    }
    j["passed"] = ok;
    j["total"] = n;
    j["seconds"] = total;
    emit(rc, j.dump(2));
  }
  if (n == 0) throw InputError("filter '" + filter + "' matches no triple");
  return ok == n ? kExitOk : kExitRefuted;
}

int cmd_bench(const std::string &code, int dmax, int repeats, const RunConfig &rc) {
  if (code != "rep") throw InputError("only --code rep is supported");
  const auto rows = repetition_scaling(dmax, repeats, rc.verify());
  const double k = fit_exponent(rows);
  if (rc.format == "text") {
    std::ostringstream os;
    os << std::setw(4) << "d" << std::setw(14) << "seconds" << std::setw(12) << "statements"
       << std::setw(10) << "verified\n";
    for (const auto &r : rows) {
      os << std::setw(4) << r.d << std::setw(14) << std::setprecision(6) << r.seconds
         << std::setw(12) << r.statements << std::setw(6) << r.verified << "/" << r.triples
         << "\n";
    }
    os << "fitted exponent " << std::setprecision(3) << k << "\n";
    emit(rc, os.str());
  } else {
    json j;
    j["code"] = code;
    j["rows"] = json::array();
    for (const auto &r : rows) {
      j["rows"].push_back({{"d", r.d},
                           {"seconds", r.seconds},
                           {"statements", r.statements},
                           {"verified", r.verified},
                           {"triples", r.triples}});
    }
    j["exponent"] = k;
    emit(rc, j.dump(2));
  }
  for (const auto &r : rows) {
    if (r.verified != r.triples) return kExitRefuted;
  }
  return kExitOk;
}

int cmd_corpus_emit(const std::string &dir, const std::vector<int> &distances) {
  auto cases = golden_suite();
  for (int d : distances) {
    if (d == 3) continue;
    for (auto &c : gen_repetition_suite(d)) cases.push_back(std::move(c));
  }
  const auto paths = emit_corpus(cases, dir);
  std::cout << "wrote " << paths.size() << " files to " << dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Hoare-logic verifier for quantum error correction programs"};
  app.require_subcommand(1);
  RunConfig rc;
  std::vector<std::string> decoder_dirs;
  app.add_option("--decoders", decoder_dirs, "Directories holding registry decoder programs");

  std::string path, init, sigma_text, filter, code = "rep", out_dir = "corpus";
  bool denotational = false, no_oracle = false;
  int dmax = 25, repeats = 3;
  std::vector<int> distances;

  auto *verify = app.add_subcommand("verify", "Verify a .qtrip triple");
  verify->add_option("triple", path, "Triple file")->required();
  add_common(verify, rc);

  auto *simulate = app.add_subcommand("simulate", "Run a program on the dense interpreter");
  simulate->add_option("program", path, "Program file")->required();
  simulate->add_option("--init", init, "Initial basis state, q_{n-1} ... q_0");
  simulate->add_option("--sigma", sigma_text, "Initial stabilizer values, e.g. s0=Z0*Z1");
  simulate->add_flag("--denotational", denotational, "Use the direct denotational evaluator");
  add_common(simulate, rc);

  auto *suite = app.add_subcommand("suite", "Verify the golden suite with oracle cross-checks");
  suite->add_option("--filter", filter, "Substring of a case, family, triple name or tag");
  suite->add_flag("--no-oracle", no_oracle, "Skip dense cross-checks");
  add_common(suite, rc);

  auto *bench = app.add_subcommand("bench", "Symbolic verification time against distance");
  bench->add_option("--code", code, "Code family")->check(CLI::IsMember({"rep"}));
  bench->add_option("--dmax", dmax, "Largest odd distance")->check(CLI::Range(3, 101));
  bench->add_option("--repeats", repeats, "Timing repeats, best kept")->check(CLI::PositiveNumber);
  add_common(bench, rc);

  auto *corpus = app.add_subcommand("corpus", "Corpus files");
  corpus->require_subcommand(1);
  auto *corpus_emit_cmd = corpus->add_subcommand("emit", "Write .qecv, .qtrip and manifest.json");
  corpus_emit_cmd->add_option("--out", out_dir, "Output directory");
  corpus_emit_cmd->add_option("--distance", distances, "Extra repetition distances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInput;
  }
  rc.decoder_dirs = decoder_dirs;

  try {
    if (*verify) return cmd_verify(path, rc);
    if (*simulate) return cmd_simulate(path, init, sigma_text, denotational, rc);
    if (*suite) return cmd_suite(filter, no_oracle, rc);
    if (*bench) return cmd_bench(code, dmax, repeats, rc);
    if (*corpus_emit_cmd) return cmd_corpus_emit(out_dir, distances);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
