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

#include <gtest/gtest.h>

#include "qecv/corpus.hpp"
#include "qecv/decoder.hpp"
#include "qecv/error.hpp"
#include "qecv/lang.hpp"

namespace qecv {
namespace {

constexpr const char *kExample = R"(name: error_correction
qubits: 4
svars: s0

s0 := Z0*Z1*Z2*Z3
if M[s0; q3 q2 q1 q0] then
  skip
else
  q0 := X q0
  s0 := -s0
end
)";

TEST(Parse, Example) {
  const auto p = parse_program(kExample);
  EXPECT_EQ(p.name, "error_correction");
  EXPECT_EQ(p.n_qubits, 4);
  ASSERT_EQ(p.svars.size(), 1u);
  const auto *seq = p.body->as<Seq>();
  ASSERT_NE(seq, nullptr);
  ASSERT_EQ(seq->items.size(), 2u);
  const auto *a = seq->items[0]->as<SAssign>();
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->rhs.literal, parse_pauli("Z0*Z1*Z2*Z3"));
  const auto *m = seq->items[1]->as<IfM>();
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(m->qubits, (std::vector<Qubit>{3, 2, 1, 0}));
}

TEST(Parse, PrintRoundTrip) {
  const auto p = parse_program(kExample);
  EXPECT_TRUE(program_equal(parse_program(print_program(p)), p));
  EXPECT_EQ(print_program(parse_program(print_program(p))), print_program(p));
}

TEST(Parse, CorpusRoundTrip) {
  for (const auto &c : golden_suite()) {
    const auto text = print_program(c.program);
    EXPECT_TRUE(program_equal(parse_program(text), c.program)) << c.name;
  }
}

TEST(Parse, StatementForms) {
  const auto p = parse_program(R"(qubits: 3
svars: a b

q2 q1 q0 := |000>
q0 q1 := CX q0 q1
q1 q2 := Z1*Z2
a := I
b := -a
while M[a; q0] label L do
  skip
done
correct(a, b)
)");
  const auto &items = p.body->as<Seq>()->items;
  ASSERT_EQ(items.size(), 7u);
  EXPECT_TRUE(items[0]->is<Init>());
  EXPECT_EQ(items[1]->as<Unitary>()->gate.kind, GateKind::CNOT);
  EXPECT_EQ(items[2]->as<Unitary>()->gate.kind, GateKind::Expr);
  EXPECT_EQ(items[3]->as<SAssign>()->rhs.kind, UnaryStabExpr::Kind::IdentityOff);
  EXPECT_EQ(items[4]->as<SAssign>()->rhs.kind, UnaryStabExpr::Kind::NegVar);
  EXPECT_EQ(items[5]->as<WhileM>()->label, "L");
  EXPECT_EQ(items[6]->as<Correct>()->site, 0);
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse_program("qubits: 2\nsvars: s\n\ns := Z0\nq0 := Q q0\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError &e) {
    EXPECT_EQ(e.line(), 5);
  }
  EXPECT_THROW(parse_program("qubits: 2\nsvars: s\n\nt := Z0\n"), UndeclaredVariable);
  EXPECT_THROW(parse_program("qubits: 2\nsvars: s\n\nq0 := CX q0\n"), ArityMismatch);
  EXPECT_THROW(parse_program("qubits: 2\nsvars: s\n\nq5 := X q5\n"), Error);
  EXPECT_THROW(parse_program("qubits: 2\nsvars: s\n\nif M[s; q0] then skip\n"), SyntaxError);
}

TEST(Correct, SitesArePreOrder) {
  auto p = parse_program(R"(qubits: 3
svars: s0 s1

correct(s0, s1)
if M[s0; q0 q1] then
  correct(s0)
else
  correct(s1)
end
correct(s0, s1)
)");
  EXPECT_EQ(number_correct_sites(p), 4);
  std::vector<int> sites;
  visit_stmts(*p.body, [&](const Stmt &s) {
    if (const auto *c = s.as<Correct>()) sites.push_back(c->site);
  });
  EXPECT_EQ(sites, (std::vector<int>{0, 1, 2, 3}));
}

TEST(Correct, ExpandRegistryDecoder) {
  auto p = parse_program("qubits: 3\nsvars: a b\ndecoder 0: rep3_lookup\n\ncorrect(a, b)\n");
  std::map<std::string, ProgramUnit> reg{{"rep3_lookup", repetition_decoder(3)}};
  const auto e = expand_correct(p, reg);
  int corrects = 0, ifs = 0;
  bool renamed = true;
  visit_stmts(*e.body, [&](const Stmt &s) {
    corrects += s.is<Correct>();
    if (const auto *m = s.as<IfM>()) {
      ++ifs;
      renamed = renamed && (m->var == "a" || m->var == "b");
    }
  });
  EXPECT_EQ(corrects, 0);
  EXPECT_EQ(ifs, 3);
  EXPECT_TRUE(renamed);
  EXPECT_THROW(expand_correct(p, {}, false), MissingDecoder);
}

TEST(Decoder, RepThreeMatchesHandWrittenTree) {
  const auto want = parse_program(R"(name: rep3_lookup
qubits: 3
svars: s0 s1

if M[s0; q0 q1] then
  if M[s1; q1 q2] then
    skip
  else
    q2 := X q2
    s1 := -s1
  end
else
  if M[s1; q1 q2] then
    q0 := X q0
    s0 := -s0
  else
    q1 := X q1
    s0 := -s0
    s1 := -s1
  end
end
)");
  const auto stabs = repetition_stabilizers(3);
  SyndromeTable table = {{{-1, 1}, parse_pauli("X0")},
                         {{-1, -1}, parse_pauli("X1")},
                         {{1, -1}, parse_pauli("X2")}};
  const auto got = make_lookup_decoder("rep3_lookup", 3, {"s0", "s1"}, stabs, table);
  EXPECT_TRUE(program_equal(got, want)) << print_program(got);
  EXPECT_TRUE(program_equal(repetition_decoder(3), want));
}

TEST(Decoder, EmptyTableMeasuresOnly) {
  const auto stabs = repetition_stabilizers(3);
  const auto body = lookup_decoder_body({"s0", "s1"}, stabs, {});
  int unitaries = 0, ifs = 0;
  visit_stmts(*body, [&](const Stmt &s) {
    unitaries += s.is<Unitary>();
    ifs += s.is<IfM>();
  });
  EXPECT_EQ(unitaries, 0);
  EXPECT_EQ(ifs, 3);
}

TEST(Decoder, AmbiguousSyndrome) {
  const auto stabs = repetition_stabilizers(3);
  SyndromeTable table = {{{-1, 1}, parse_pauli("X0")}, {{-1, 1}, parse_pauli("X1")}};
  EXPECT_THROW(lookup_decoder_body({"s0", "s1"}, stabs, table), AmbiguousSyndrome);
}

TEST(Decoder, SingleErrorTableOrder) {
  const auto table = single_error_table(repetition_stabilizers(3));
  ASSERT_EQ(table.size(), 3u);
  EXPECT_EQ(table[0].correction, parse_pauli("X0"));
  EXPECT_EQ(table[1].correction, parse_pauli("X1"));
  EXPECT_EQ(table[2].correction, parse_pauli("X2"));
  EXPECT_EQ(syndrome_of(parse_pauli("X1"), repetition_stabilizers(3)),
            (std::vector<int>{-1, -1}));
}

TEST(Stats, Counts) {
  const auto s = program_stats(parse_program(kExample));
  EXPECT_EQ(s.statement_count, 5);
  EXPECT_EQ(s.svar_count, 1);
  EXPECT_EQ(s.qubit_count, 4);
  EXPECT_EQ(s.max_if_depth, 1);
}

}  // namespace
}  // namespace qecv
