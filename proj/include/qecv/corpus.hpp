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

#ifndef QECV_CORPUS_HPP
#define QECV_CORPUS_HPP

#include <map>
#include <string>
#include <vector>

#include "qecv/hoare.hpp"
#include "qecv/lang.hpp"

// Case-study generators: repetition codes, the distance-3 surface-code
// layouts, and small rule instances. Together they form the golden suite.

namespace qecv {

struct CaseStudy {
  std::string name;
  /// "repetition", "surface" or "lemma".
  std::string family;
  ProgramUnit program;
  std::vector<Triple> triples;
  /// Program width fits the default oracle cap.
  bool oracle_eligible = false;
  /// Registry decoders referenced by the program's Correct sites.
  std::map<std::string, ProgramUnit> registry;
  /// Places where the transcription had to repair or complete its source.
  std::vector<std::string> flags;
};

/// Init, logical X, logical Z, logical CNOT and the two noisy logical X
/// programs for the distance-d bit-flip code with stabilizers Z_i Z_{i+1}.
/// Throws InvalidDistance unless d is odd and at least 3.
std::vector<CaseStudy> gen_repetition_suite(int d);

/// Stabilizer values of the distance-d repetition code.
std::vector<SignedPauli> repetition_stabilizers(int d, Qubit offset = 0);

/// The single-error lookup decoder of the distance-d code, registered as
/// "rep<d>_lookup" with formal variables s0 .. s{d-2}.
ProgramUnit repetition_decoder(int d);

/// Fixed distance-3 surface-code case studies.
std::vector<CaseStudy> gen_surface_suite();

/// The worked example, the decoding axiom, and instances of the
/// implication and Boolean-assertion rules.
std::vector<CaseStudy> gen_lemma_suite();

/// Repetition (d = 3), surface and lemma suites.
std::vector<CaseStudy> golden_suite();

/// One syndrome round of the distance-d code as single QECV assignments.
ProgramUnit qecv_syndrome_round(int d);

/// The same round written with an ancilla, basis changes, controlled gates
/// and a measurement per stabilizer.
ProgramUnit gate_level_syndrome_round(int d);

/// Writes <dir>/<case>.qecv, one .qtrip per triple and manifest.json.
/// Returns the paths written.
std::vector<std::string> emit_corpus(const std::vector<CaseStudy> &cases,
                                     const std::string &dir);

/// The manifest document alone.
std::string corpus_manifest(const std::vector<CaseStudy> &cases);

}  // namespace qecv

#endif  // QECV_CORPUS_HPP
