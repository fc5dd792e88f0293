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

#ifndef QECV_DECODER_HPP
#define QECV_DECODER_HPP

#include <string>
#include <vector>

#include "qecv/lang.hpp"
#include "qecv/pauli.hpp"

namespace qecv {

/// One row of a lookup table: the measured sign of every stabilizer
/// (+1 or -1, in stabilizer order) and the Pauli correction to apply.
struct SyndromeEntry {
  std::vector<int> signs;
  SignedPauli correction;
};

using SyndromeTable = std::vector<SyndromeEntry>;

/// Syndrome of an error: -1 where it anticommutes with the stabilizer.
std::vector<int> syndrome_of(const SignedPauli &error,
                             const std::vector<SignedPauli> &stabilizers);

/// Every weight-one error on the stabilizers' support, qubits in ascending
/// order and letters in the order X, Z, Y. The first error reaching a
/// syndrome owns it; the trivial syndrome is skipped.
SyndromeTable single_error_table(const std::vector<SignedPauli> &stabilizers);

/// Nested measurement tree over `vars` (bound to `stabilizers`). Each leaf
/// applies the tabulated correction letter by letter and re-flips every
/// variable whose measurement returned -1. Leaves with no entry do nothing,
/// and a subtree no entry can reach stops measuring and does nothing. An
/// empty table yields the full measure-only tree.
/// Throws AmbiguousSyndrome when two entries share a syndrome with different
/// corrections.
StmtPtr lookup_decoder_body(const std::vector<std::string> &vars,
                            const std::vector<SignedPauli> &stabilizers,
                            const SyndromeTable &table);

/// The same tree packaged as a registry decoder whose formal variables are
/// `vars`.
ProgramUnit make_lookup_decoder(const std::string &name, int n_qubits,
                                const std::vector<std::string> &vars,
                                const std::vector<SignedPauli> &stabilizers,
                                const SyndromeTable &table);

}  // namespace qecv

#endif  // QECV_DECODER_HPP
