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

#ifndef QECV_HOARE_HPP
#define QECV_HOARE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qecv/assertion.hpp"
#include "qecv/lang.hpp"
#include "qecv/oracle.hpp"

// Forward (strongest-postcondition) verifier for QECV programs.

namespace qecv {

/// Verifier-side knowledge of one stabilizer variable.
struct SigmaEntry {
  enum class State {
    Off,          // identity: measurement always returns +1
    Known,        // exact signed value
    SignUnknown,  // +value or -value depending on the path
    Unknown,
  };
  State state = State::Off;
  SignedPauli value;

  static SigmaEntry off() { return {}; }
  static SigmaEntry known(SignedPauli v);
  bool operator==(const SigmaEntry &o) const { return state == o.state && value == o.value; }
};

using SymbolicSigma = std::map<std::string, SigmaEntry>;

/// Every declared variable, Known where `concrete` has a non-identity value.
SymbolicSigma symbolic_sigma(const std::vector<std::string> &svars, const Sigma &concrete = {});
std::string to_string(const SymbolicSigma &s);

/// Entry-wise join of two control paths.
SymbolicSigma join_sigma(const SymbolicSigma &a, const SymbolicSigma &b);

struct Obligation {
  std::string rule;
  Assertion lhs;
  Assertion rhs;
  ProofStatus status;
};

struct TraceStep {
  std::string rule;
  std::string stmt;
  Assertion pre;
  Assertion post;
  std::vector<Obligation> obligations;
  std::string note;
};

/// Rule applications in completion order: children before their parent.
struct ProofTrace {
  std::vector<TraceStep> steps;
  std::vector<std::string> rule_names() const;
};

struct Triple {
  std::string name;
  /// Proposition tag used by suite filters and reports.
  std::string tag;
  Assertion pre;
  ProgramUnit program;
  Assertion post;
  /// Loop label -> invariant.
  std::map<std::string, Assertion> invariants;
  /// Stabilizer variables active before the program runs.
  Sigma sigma;
};

struct VerifyConfig {
  ImplyConfig imply;
  /// Registry decoders for Correct sites bound by name.
  std::map<std::string, ProgramUnit> registry;
  /// Weaken a non-commuting assertion through a consequence step before a
  /// literal stabilizer assignment instead of dropping it to True.
  bool weaken_assignments = true;
};

struct VerificationOutcome {
  enum class Status { Verified, Refuted, Inconclusive };
  Status status = Status::Inconclusive;
  /// Witness for Refuted, reason tag for Inconclusive.
  std::string detail;
  ProofTrace trace;
  Assertion final_assertion;
  double seconds = 0.0;
};

std::string to_string(VerificationOutcome::Status s);

struct SpResult {
  Assertion post;
  SymbolicSigma sigma;
};

/// One forward pass over `stmt`. Correct sites are decoded axiomatically
/// unless `bindings` maps their site to "lookup". Steps are appended to
/// `trace` when given. Throws MissingInvariant, UnresolvedSigma and the
/// algebra errors; implication failures are recorded as obligations.
SpResult sp(const Assertion &a, const SymbolicSigma &sig, const Stmt &stmt,
            ProofTrace *trace = nullptr, const VerifyConfig &cfg = {.weaken_assignments = false},
            const std::map<std::string, Assertion> &invariants = {},
            const std::map<int, std::string> &bindings = {});

/// a when a implies the conjunction A_S of the active values of `vars`,
/// otherwise A_S. Throws UnresolvedSigma when a variable is not Known or Off.
Assertion apply_decode_axiom(const Assertion &a, const SymbolicSigma &sig,
                             const std::vector<std::string> &vars,
                             const ImplyConfig &cfg = {});

VerificationOutcome verify_triple(const Triple &t, const VerifyConfig &cfg = {});

struct OracleCheckConfig {
  int samples = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int oracle_cap = kDefaultOracleCap;
  int unroll_cap = 64;
  std::map<std::string, ProgramUnit> registry;
};

struct SampleFailure {
  int sample = 0;
  std::string reason;
};

struct OracleReport {
  int samples = 0;
  int passed = 0;
  std::vector<SampleFailure> failures;
  bool ok() const { return samples > 0 && passed == samples; }
};

/// Runs sampled precondition states through the dense interpreter and
/// checks every terminal branch against the postcondition. Throws
/// OracleCapExceeded for programs wider than the cap.
OracleReport oracle_check(const Triple &t, const OracleCheckConfig &cfg = {});

/// {name, status, detail, obligations:[{rule, lhs, rhs, status}], timings}.
std::string report_json(const Triple &t, const VerificationOutcome &o);

/// Human-readable outcome with one line per trace step.
std::string report_text(const Triple &t, const VerificationOutcome &o);

// Triple files (triple_file.cpp).

/// Parses a `.qtrip` document. Relative program paths resolve against
/// `base_dir`.
Triple parse_triple(std::string_view text, const std::string &base_dir = ".");
Triple load_triple(const std::string &path);
/// Writes the triple with the program inline.
std::string print_triple(const Triple &t);

}  // namespace qecv

#endif  // QECV_HOARE_HPP
