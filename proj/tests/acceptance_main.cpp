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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "qecv/corpus.hpp"
#include "qecv/error.hpp"
#include "qecv/hoare.hpp"
#include "qecv/oracle.hpp"
#include "qecv/scaling.hpp"

#ifndef QECV_SOURCE_DIR
#define QECV_SOURCE_DIR "."
#endif

namespace {

using namespace qecv;
using Status = VerificationOutcome::Status;

// Pinned tolerances and limits.
constexpr double kSuiteSeconds = 60.0;
constexpr int kSoundnessSamples = 100;
constexpr int kSoundnessMaxQubits = 10;
constexpr double kSoundnessTol = 1e-9;
constexpr std::uint64_t kSeed = 20260101;
constexpr double kExampleTol = 1e-12;
constexpr double kEquivTol = 1e-9;
constexpr int kEquivSamplesPerTriple = 3;
constexpr int kAlgebraChecks = 10000;
constexpr double kAlgebraTol = 1e-12;
constexpr int kMinStatementRatio = 8;
constexpr int kScalingDmax = 25;
constexpr double kMaxExponent = 4.0;
constexpr double kD3Seconds = 1.0;
constexpr std::size_t kSingleTTerms = 2;
constexpr int kChainLength = 8;
constexpr double kChainGrowth = 4.0;

struct Result {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const char *name, const std::function<Result()> &f) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = f();
  } catch (const std::exception &e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %-28s %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", name, r.detail.c_str(), s);
  std::fflush(stdout);
  failures += !r.pass;
}

Status verify_case(const CaseStudy &c, const Triple &t) {
  VerifyConfig cfg;
  cfg.registry = c.registry;
  return verify_triple(t, cfg).status;
}

Result golden_suite_criterion() {
  const auto start = std::chrono::steady_clock::now();
  int total = 0, verified = 0;
  std::string failed;
  for (const auto &c : golden_suite()) {
    for (const auto &t : c.triples) {
      ++total;
      if (verify_case(c, t) == Status::Verified) {
        ++verified;
      } else {
        failed += " " + t.name;
      }
    }
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << verified << "/" << total << " Verified in " << s << " s" << failed;
  return {verified == total && s < kSuiteSeconds, os.str()};
}

Result worked_example_criterion() {
  const auto t = load_triple(QECV_SOURCE_DIR "/tests/data/worked_example.qtrip");
  const auto o = verify_triple(t);
  // The step list as printed, one Sequencing for the else branch and one
  // for the whole program.
  const std::vector<std::string> want = {"Assignment", "Skip",      "Unitary",    "Unitary",
                                         "Sequencing", "Condition", "Sequencing", "Consequence"};
  const auto got = o.trace.rule_names();
  std::string seq;
  for (const auto &r : got) seq += (seq.empty() ? "" : ",") + r;
  return {o.status == Status::Verified && got == want, to_string(o.status) + " [" + seq + "]"};
}

Result operational_criterion() {
  std::ifstream in(QECV_SOURCE_DIR "/tests/data/error_correction.qecv");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto p = parse_program(ss.str());
  const auto r = run_program(p, basis_state("0001"));
  if (r.branches.size() != 1) return {false, std::to_string(r.branches.size()) + " branches"};
  brute::Mat want = brute::Mat::Zero(16, 16);
  want(0, 0) = 1.0;
  const double err = (r.branches[0].rho - want).cwiseAbs().maxCoeff();
  const bool sigma_ok = r.branches[0].sigma.size() == 1 &&
                        r.branches[0].sigma.at("s0") == parse_pauli("Z0*Z1*Z2*Z3");
  std::ostringstream os;
  os << "max |rho - |0000><0000|| = " << err << ", sigma " << to_string(r.branches[0].sigma);
  return {err <= kExampleTol && sigma_ok, os.str()};
}

Result soundness_criterion() {
  int triples = 0, samples = 0, vacuous = 0;
  std::string failed;
  for (const auto &c : golden_suite()) {
    if (c.program.n_qubits > kSoundnessMaxQubits) continue;
    for (const auto &t : c.triples) {
      if (verify_case(c, t) != Status::Verified) continue;
      OracleCheckConfig oc;
      oc.samples = kSoundnessSamples;
      oc.seed = kSeed;
      oc.tol = kSoundnessTol;
      oc.registry = c.registry;
      ++triples;
      try {
        const auto rep = oracle_check(t, oc);
        samples += rep.samples;
        if (!rep.ok()) failed += " " + t.name;
      } catch (const UnsatisfiableAssertion &) {
        ++vacuous;  // empty satisfaction set: nothing to run
      }
    }
  }
  std::ostringstream os;
  os << triples << " triples, " << samples << " samples, " << vacuous << " vacuous" << failed;
  return {failed.empty() && triples > 0, os.str()};
}

Result equivalence_criterion() {
  int programs = 0, runs = 0;
  double worst = 0.0;
  for (const auto &c : golden_suite()) {
    if (!c.oracle_eligible) continue;
    ++programs;
    const auto p = expand_correct(c.program, c.registry, true);
    for (const auto &t : c.triples) {
      std::vector<MachineState> inits;
      try {
        inits = sample_pre_states(t.pre, p.n_qubits, kEquivSamplesPerTriple, kSeed, t.sigma);
      } catch (const UnsatisfiableAssertion &) {
        inits = {basis_state(std::string(static_cast<std::size_t>(p.n_qubits), '0'), t.sigma)};
      }
      for (const auto &s : inits) {
        worst = std::max(worst, aggregate_distance(run_program(p, s).branches,
                                                   run_denotational(p, s).branches));
        ++runs;
      }
    }
  }
  std::ostringstream os;
  os << programs << " programs, " << runs << " runs, max distance " << worst;
  return {worst <= kEquivTol && runs > 0, os.str()};
}

Result algebra_criterion() {
  brute::Gen gen(kSeed);
  int passed = 0, run = 0;
  for (; run < kAlgebraChecks; ++run) {
    bool ok = true;
    const int n = gen.uniform(1, 4);
    switch (run % 4) {
      case 0: {  // group laws
        const auto a = gen.pauli(n), b = gen.pauli(n), c = gen.pauli(n);
        ok = mul_pauli(mul_pauli(a, b), c) == mul_pauli(a, mul_pauli(b, c)) &&
             mul_pauli(a, a.with_phase(-a.phase_exp())).is_identity() &&
             (brute::pauli(mul_pauli(a, b), n) - brute::pauli(a, n) * brute::pauli(b, n)).norm() <
                 kAlgebraTol;
        break;
      }
      case 1: {  // commutation against matrices
        const auto a = gen.pauli(n), b = gen.pauli(n);
        const brute::Mat ma = brute::pauli(a, n), mb = brute::pauli(b, n);
        ok = commutes(a, b) == ((ma * mb - mb * ma).norm() < kAlgebraTol);
        break;
      }
      case 2: {  // Clifford conjugation against matrices
        const auto g = gen.clifford(n);
        const auto p = gen.pauli(n);
        const brute::Mat u = brute::gate(g, n);
        const brute::Mat want = u * brute::pauli(p, n) * u.adjoint();
        ok = (brute::pauli(conjugate_by_gate(g, p), n) - want).norm() < kAlgebraTol;
        break;
      }
      case 3: {  // Pauli expansion reconstruction
        const std::size_t dim = std::size_t{1} << n;
        brute::Mat m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
          for (std::size_t c = 0; c < dim; ++c) m(r, c) = gen.complex();
        }
        ok = (brute::expr(pauli_expand(m, n), n) - m).norm() < kAlgebraTol;
        break;
      }
    }
    passed += ok;
  }
  return {passed == run, std::to_string(passed) + "/" + std::to_string(run) + " checks"};
}

Result statement_ratio_criterion() {
  bool ok = true;
  std::ostringstream os;
  for (int d : {3, 5, 7}) {
    const int stabs = d - 1;
    const int q = program_stats(qecv_syndrome_round(d)).statement_count;
    const int g = program_stats(gate_level_syndrome_round(d)).statement_count;
    const double ratio = static_cast<double>(g) / q;
    ok = ok && q == stabs && ratio >= kMinStatementRatio;
    os << "d=" << d << ": " << g << "/" << q << "=" << ratio << " ";
  }
  return {ok, os.str()};
}

Result scaling_criterion() {
  const auto rows = repetition_scaling(kScalingDmax, 3);
  const double k = fit_exponent(rows);
  bool all_verified = true;
  for (const auto &r : rows) all_verified = all_verified && r.verified == r.triples;
  std::ostringstream os;
  os << "exponent " << k << " over d=3.." << kScalingDmax << ", d=3 " << rows.front().seconds
     << " s, d=" << rows.back().d << " " << rows.back().seconds << " s";
  return {all_verified && k <= kMaxExponent && rows.front().seconds < kD3Seconds, os.str()};
}

Result non_clifford_criterion() {
  auto chain = [](int k) {
    std::string body;
    for (int j = 0; j < k; ++j) {
      const std::string q = std::to_string(j % 3), r = std::to_string((j + 1) % 3);
      body += "q" + q + " := T q" + q + "\n";
      body += "q" + q + " q" + r + " := CX q" + q + " q" + r + "\n";
      body += "q" + q + " := H q" + q + "\n";
    }
    Triple t;
    t.pre = parse_assertion("X0*X1*X2");
    t.post = Assertion::truth();
    t.program = parse_program("qubits: 3\nsvars:\n\n" + body);
    const auto o = verify_triple(t);
    std::size_t terms = 0;
    for (const auto &l : o.final_assertion.leaves()) terms = std::max(terms, l.size());
    return std::make_pair(o.status, terms);
  };
  Triple single;
  single.pre = parse_assertion("X0");
  single.program = parse_program("qubits: 1\nsvars:\n\nq0 := T q0\n");
  single.post = parse_assertion("0.7071067811865476*X0 + 0.7071067811865476*Y0");
  const auto o = verify_triple(single);
  std::size_t single_terms = 0;
  for (const auto &l : o.final_assertion.leaves()) single_terms = std::max(single_terms, l.size());

  std::ostringstream os;
  os << "single T: " << to_string(o.status) << ", " << single_terms << " terms; chain:";
  std::size_t first = 0, last = 0;
  for (int k = 1; k <= kChainLength; ++k) {
    const auto [status, terms] = chain(k);
    if (k == 1) first = terms;
    last = terms;
    os << " " << terms;
  }
  const bool grows = static_cast<double>(last) >= kChainGrowth * static_cast<double>(first);
  return {o.status == Status::Verified && single_terms <= kSingleTTerms && grows, os.str()};
}

}  // namespace

int main() {
  report("golden-suite", golden_suite_criterion);
  report("worked-example-trace", worked_example_criterion);
  report("operational-example", operational_criterion);
  report("empirical-soundness", soundness_criterion);
  report("op-den-equivalence", equivalence_criterion);
  report("algebra-properties", algebra_criterion);
  report("statement-ratio", statement_ratio_criterion);
  report("verification-scaling", scaling_criterion);
  report("non-clifford", non_clifford_criterion);
  std::printf("%d criteria failed\n", failures);
  return failures;
}
