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

#include "corpus_internal.hpp"

namespace qecv::corpus_detail {

std::string qubit_list(const std::vector<Qubit> &qs) {
  std::string out;
  for (Qubit q : qs) {
    if (!out.empty()) out += ' ';
    out += "q" + std::to_string(q);
  }
  return out;
}

std::vector<Qubit> range_qubits(Qubit from, Qubit to) {
  std::vector<Qubit> out;
  for (Qubit q = from; q < to; ++q) out.push_back(q);
  return out;
}

std::vector<std::string> svar_names(int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i < to; ++i) out.push_back("s" + std::to_string(i));
  return out;
}

ProgramText &ProgramText::apply(const SignedPauli &p) {
  return line(qubit_list(p.support()) + " := " + to_string(p));
}

ProgramText &ProgramText::gate(const std::string &name, std::vector<Qubit> qs) {
  const auto ql = qubit_list(qs);
  return line(ql + " := " + name + " " + ql);
}

ProgramText &ProgramText::init(std::vector<Qubit> qs) {
  return line(qubit_list(qs) + " := |" + std::string(qs.size(), '0') + ">");
}

ProgramText &ProgramText::correct(const std::vector<std::string> &vars,
                                  const std::string &binding) {
  std::string s = "correct(";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? ", " : "") + vars[i];
  bindings_.push_back(binding);
  return line(s + ")");
}

std::string ProgramText::source() const {
  std::ostringstream os;
  os << "name: " << name_ << "\n";
  os << "qubits: " << n_ << "\n";
  os << "svars:";
  for (const auto &v : svars_) os << " " << v;
  os << "\n";
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    if (bindings_[i] != kAxiomatic) os << "decoder " << i << ": " << bindings_[i] << "\n";
  }
  os << "\n" << body_.str();
  return os.str();
}

ProgramUnit ProgramText::build() const {
  auto p = parse_program(source());
  // Unbound sites stay axiomatic; make that explicit.
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    p.decoder_bindings.emplace(static_cast<int>(i), bindings_[i]);
  }
  return p;
}

std::string conj_text(const std::vector<SignedPauli> &ps) {
  std::string out;
  for (const auto &p : ps) {
    if (p.is_identity()) continue;
    if (!out.empty()) out += " /\\ ";
    out += to_string(p);
  }
  return out.empty() ? "TRUE" : out;
}

std::string with(const std::string &head, const std::vector<SignedPauli> &rest) {
  const auto tail = conj_text(rest);
  if (tail == "TRUE") return head;
  return head + " /\\ " + tail;
}

Triple make_triple(const std::string &name, const std::string &tag, const std::string &pre,
                   const ProgramUnit &program, const std::string &post, const Sigma &sigma) {
  Triple t;
  t.name = name;
  t.tag = tag;
  t.pre = parse_assertion(pre);
  t.program = program;
  t.post = parse_assertion(post);
  t.sigma = sigma;
  return t;
}

Sigma sigma_of(const std::vector<std::string> &vars, const std::vector<SignedPauli> &vals) {
  Sigma s;
  for (std::size_t i = 0; i < vars.size() && i < vals.size(); ++i) {
    if (!vals[i].is_identity()) s[vars[i]] = vals[i];
  }
  return s;
}

CaseStudy new_case(std::string name, std::string family, ProgramUnit program,
                   bool oracle_eligible) {
  CaseStudy cs;
  cs.name = std::move(name);
  cs.family = std::move(family);
  cs.program = std::move(program);
  cs.oracle_eligible = oracle_eligible;
  return cs;
}

}  // namespace qecv::corpus_detail
