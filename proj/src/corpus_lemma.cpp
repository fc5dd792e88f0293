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

namespace qecv {

using namespace corpus_detail;

namespace {

CaseStudy worked_example() {
  ProgramText pt("worked_example", 2, {"s"});
  pt.line("s := Z1");
  pt.line("if M[s; q1] then skip else q1 := X q1; q0 := X q0 end");
  auto cs = new_case("lemma.worked_example", "lemma", pt.build(), true);
  cs.triples.push_back(make_triple(cs.name, "lemma/worked_example", "Z0*Z1", cs.program, "Z0"));
  return cs;
}

CaseStudy decode_axiom() {
  ProgramText pt("decode_axiom", 3, {"s0", "s1"});
  pt.correct({"s0", "s1"}, kAxiomatic);
  auto cs = new_case("lemma.decode_axiom", "lemma", pt.build(), true);
  const auto stabs = repetition_stabilizers(3);
  cs.triples.push_back(make_triple(cs.name, "lemma/decode_axiom", "TRUE", cs.program,
                                   conj_text(stabs), sigma_of({"s0", "s1"}, stabs)));
  return cs;
}

CaseStudy implication() {
  ProgramText pt("implication", 2, {});
  pt.line("skip");
  auto cs = new_case("lemma.implication", "lemma", pt.build(), true);
  const std::pair<const char *, const char *> cases[] = {
      {"Z0 /\\ Z1", "Z0*Z1"},
      {"Z0 /\\ Z1", "0.5*Z0 + 0.5*Z1"},
      {"Z0 /\\ Z0*Z1", "Z1"},
      {"(0.6*Z0 + 0.8*X0) /\\ Z1", "0.6*Z0 + 0.8*X0*Z1"},
  };
  int i = 0;
  for (const auto &[pre, post] : cases) {
    cs.triples.push_back(make_triple(cs.name + "." + std::to_string(++i), "lemma/implication",
                                     pre, cs.program, post));
  }
  return cs;
}

CaseStudy boolean_rules() {
  ProgramText pt("boolean_rules", 2, {});
  pt.gate("H", {0});
  auto cs = new_case("lemma.boolean", "lemma", pt.build(), true);
  const std::pair<const char *, const char *> cases[] = {
      {"Z0 /\\ Z1", "X0 /\\ Z1"},
      {"Z0 \\/ X0", "X0 \\/ Z0"},
      {"TRUE", "TRUE"},
      // Unsatisfiable precondition: holds vacuously.
      {"Z0 /\\ X0", "Z1"},
  };
  const char *suffix[] = {"and", "or", "true", "false"};
  for (int i = 0; i < 4; ++i) {
    cs.triples.push_back(make_triple(cs.name + "." + suffix[i], "lemma/boolean", cases[i].first,
                                     cs.program, cases[i].second));
  }
  return cs;
}

}  // namespace

std::vector<CaseStudy> gen_lemma_suite() {
  return {worked_example(), decode_axiom(), implication(), boolean_rules()};
}

std::vector<CaseStudy> golden_suite() {
  auto out = gen_repetition_suite(3);
  for (auto &c : gen_surface_suite()) out.push_back(std::move(c));
  for (auto &c : gen_lemma_suite()) out.push_back(std::move(c));
  return out;
}

}  // namespace qecv
