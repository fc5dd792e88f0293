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

#include "qecv/decoder.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qecv/error.hpp"

namespace qecv {

std::vector<int> syndrome_of(const SignedPauli &error,
                             const std::vector<SignedPauli> &stabilizers) {
  std::vector<int> signs;
  signs.reserve(stabilizers.size());
  for (const auto &s : stabilizers) signs.push_back(commutes(error, s) ? 1 : -1);
  return signs;
}

SyndromeTable single_error_table(const std::vector<SignedPauli> &stabilizers) {
  std::set<Qubit> support;
  for (const auto &s : stabilizers) {
    for (Qubit q : s.support()) support.insert(q);
  }
  SyndromeTable table;
  std::set<std::vector<int>> seen;
  for (Qubit q : support) {
    for (Letter l : {Letter::X, Letter::Z, Letter::Y}) {
      const auto e = SignedPauli::single(l, q);
      auto signs = syndrome_of(e, stabilizers);
      const bool trivial = std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
      if (trivial || !seen.insert(signs).second) continue;
      table.push_back({std::move(signs), e});
    }
  }
  return table;
}

namespace {

StmtPtr leaf_body(const std::vector<std::string> &vars, const std::vector<int> &signs,
                  const std::map<std::vector<int>, SignedPauli> &index) {
  auto it = index.find(signs);
  if (it == index.end()) return make_skip();
  std::vector<StmtPtr> items;
  for (const auto &[q, l] : it->second.letters()) {
    const GateKind k = l == Letter::X ? GateKind::X : l == Letter::Z ? GateKind::Z : GateKind::Y;
    items.push_back(make_stmt(Unitary{GateApp::named(k, {q})}));
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (signs[i] < 0) {
      items.push_back(make_stmt(SAssign{vars[i], UnaryStabExpr::neg(vars[i])}));
    }
  }
  return make_seq(std::move(items));
}

StmtPtr tree(const std::vector<std::string> &vars, const std::vector<SignedPauli> &stabs,
             const std::map<std::vector<int>, SignedPauli> &index, std::vector<int> &signs) {
  const std::size_t k = signs.size();
  if (k == vars.size()) return leaf_body(vars, signs, index);
  auto it = index.lower_bound(signs);
  if (!index.empty() && it == index.end()) return make_skip();
  if (it != index.end() && !std::equal(signs.begin(), signs.end(), it->first.begin())) {
    return make_skip();
  }
  signs.push_back(1);
  auto then_branch = tree(vars, stabs, index, signs);
  signs.back() = -1;
  auto else_branch = tree(vars, stabs, index, signs);
  signs.pop_back();
  return make_stmt(IfM{vars[k], stabs[k].support(), std::move(then_branch),
                       std::move(else_branch)});
}

}  // namespace

StmtPtr lookup_decoder_body(const std::vector<std::string> &vars,
                            const std::vector<SignedPauli> &stabilizers,
                            const SyndromeTable &table) {
  if (vars.size() != stabilizers.size()) {
    throw ArityMismatch("decoder needs one stabilizer per variable");
  }
  std::map<std::vector<int>, SignedPauli> index;
  for (const auto &e : table) {
    if (e.signs.size() != vars.size()) {
      throw ArityMismatch("syndrome length does not match the stabilizer count");
    }
    auto [it, fresh] = index.emplace(e.signs, e.correction.unsigned_part());
    if (!fresh && it->second != e.correction.unsigned_part()) {
      throw AmbiguousSyndrome("syndrome claimed by both " + to_string(it->second) +
                              " and " + to_string(e.correction));
    }
  }
  if (vars.empty()) return make_skip();
  std::vector<int> signs;
  return tree(vars, stabilizers, index, signs);
}

ProgramUnit make_lookup_decoder(const std::string &name, int n_qubits,
                                const std::vector<std::string> &vars,
                                const std::vector<SignedPauli> &stabilizers,
                                const SyndromeTable &table) {
  ProgramUnit p;
  p.name = name;
  p.n_qubits = n_qubits;
  p.svars = vars;
  p.body = lookup_decoder_body(vars, stabilizers, table);
  return p;
}

}  // namespace qecv
