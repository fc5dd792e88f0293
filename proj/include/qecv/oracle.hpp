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

#ifndef QECV_ORACLE_HPP
#define QECV_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qecv/assertion.hpp"
#include "qecv/kernels.hpp"
#include "qecv/lang.hpp"

// Dense interpreter for QECV programs. Two independent evaluators are
// provided: a small-step worklist machine and a recursive direct evaluation.
// Neither consults the symbolic engine.

namespace qecv {

/// Stabilizer-variable environment. A missing entry or the identity means
/// the variable is off.
using Sigma = std::map<std::string, SignedPauli>;

std::string to_string(const Sigma &s);

struct MachineState {
  Eigen::MatrixXcd rho;
  Sigma sigma;
};

/// |bits><bits| with bits written q_{n-1} ... q_0, e.g. "0001" sets q0.
MachineState basis_state(const std::string &bits, Sigma sigma = {});

struct OracleConfig {
  int oracle_cap = kDefaultOracleCap;
  int unroll_cap = 64;
  double mass_floor = 1e-12;
  /// Residual mass above this marks a run inconclusive.
  double tol = 1e-9;
  bool record_trace = false;
  kernels::Exec exec = kernels::Exec::Parallel;
};

struct TraceEvent {
  int step = 0;
  std::string rule;
  std::string stmt;
  Sigma sigma;
  double weight = 0.0;
  std::string rho_digest;
};

struct ExecutionResult {
  std::vector<MachineState> branches;
  /// States still inside a loop when the unroll cap was reached.
  std::vector<MachineState> residual;
  std::vector<TraceEvent> trace;

  double branch_mass() const;
  double residual_mass() const;
  bool inconclusive(double tol) const { return residual_mass() > tol; }
};

/// Pending statements (front first), state, and loop iterations so far.
struct Configuration {
  std::vector<StmtPtr> rest;
  MachineState state;
  int unrolled = 0;
};

/// One small step. Measurements return both outcomes; branches lighter than
/// cfg.mass_floor are pruned. `rule` receives the rule name of the step.
std::vector<Configuration> step(const Configuration &c, const ProgramUnit &p,
                                const OracleConfig &cfg, std::string *rule = nullptr);

/// Breadth-first closure of `step`. Correct sites are resolved by a lookup
/// decoder built from the current sigma; registry decoders must already be
/// expanded.
ExecutionResult run_program(const ProgramUnit &p, const MachineState &init,
                            const OracleConfig &cfg = {});

/// Direct recursive evaluation of the denotation, loops unrolled up to the
/// same cap. Uses the serial kernels.
ExecutionResult run_denotational(const ProgramUnit &p, const MachineState &init,
                                 const OracleConfig &cfg = {});

/// Sums the branches that share a sigma. Keys are to_string(sigma).
std::map<std::string, Eigen::MatrixXcd> aggregate(const std::vector<MachineState> &branches);

/// Largest Frobenius distance between the aggregated branch sums.
double aggregate_distance(const std::vector<MachineState> &a,
                          const std::vector<MachineState> &b);

/// A rho = rho for every satisfied leaf, plus commutation of every leaf with
/// every sigma value, both in Frobenius norm.
bool satisfies(const MachineState &s, const Assertion &a, double tol = 1e-9,
               int oracle_cap = kDefaultOracleCap);

/// `count` pure states drawn from the satisfaction set of `a`, paired with
/// `sigma`. Throws UnsatisfiableAssertion when the set is empty or `a` does
/// not commute with `sigma`.
std::vector<MachineState> sample_pre_states(const Assertion &a, int n_qubits, int count,
                                            std::uint64_t seed, const Sigma &sigma = {},
                                            int oracle_cap = kDefaultOracleCap);

/// Hash of rho rounded to 1e-9, as 16 hex digits.
std::string rho_digest(const Eigen::MatrixXcd &rho);

/// One JSON object per trace event.
std::string trace_jsonl(const ExecutionResult &r);

}  // namespace qecv

#endif  // QECV_ORACLE_HPP
