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

#ifndef QECV_SRC_CORPUS_INTERNAL_HPP
#define QECV_SRC_CORPUS_INTERNAL_HPP

#include <sstream>
#include <string>
#include <vector>

#include "qecv/corpus.hpp"

namespace qecv::corpus_detail {

/// Accumulates program source text; build() goes through the parser so
/// every generated program is also a parseable document.
class ProgramText {
 public:
  ProgramText(std::string name, int n_qubits, std::vector<std::string> svars)
      : name_(std::move(name)), n_(n_qubits), svars_(std::move(svars)) {}

  ProgramText &line(const std::string &s) {
    body_ << s << "\n";
    return *this;
  }
  ProgramText &comment(const std::string &s) { return line("// " + s); }
  ProgramText &assign(const std::string &var, const SignedPauli &v) {
    return line(var + " := " + (v.is_identity() ? std::string("I") : to_string(v)));
  }
  ProgramText &off(const std::string &var) { return line(var + " := I"); }
  /// Applies a Pauli string as one inline unitary on its support.
  ProgramText &apply(const SignedPauli &p);
  ProgramText &gate(const std::string &name, std::vector<Qubit> qs);
  ProgramText &init(std::vector<Qubit> qs);
  ProgramText &correct(const std::vector<std::string> &vars, const std::string &binding);

  std::string source() const;
  ProgramUnit build() const;

 private:
  std::string name_;
  int n_;
  std::vector<std::string> svars_;
  std::ostringstream body_;
  std::vector<std::string> bindings_;
};

std::string qubit_list(const std::vector<Qubit> &qs);
std::vector<Qubit> range_qubits(Qubit from, Qubit to);
std::vector<std::string> svar_names(int from, int to);

/// a_1 /\ a_2 /\ ... over Pauli strings.
std::string conj_text(const std::vector<SignedPauli> &ps);
std::string with(const std::string &head, const std::vector<SignedPauli> &rest);

Triple make_triple(const std::string &name, const std::string &tag, const std::string &pre,
                   const ProgramUnit &program, const std::string &post,
                   const Sigma &sigma = {});

Sigma sigma_of(const std::vector<std::string> &vars, const std::vector<SignedPauli> &vals);

CaseStudy new_case(std::string name, std::string family, ProgramUnit program,
                   bool oracle_eligible);

}  // namespace qecv::corpus_detail

#endif  // QECV_SRC_CORPUS_INTERNAL_HPP
