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

#include "qecv/assertion.hpp"
#include "qecv/error.hpp"

namespace qecv {
namespace {

Assertion A(const char *s) { return parse_assertion(s); }
ProofStatus::Kind imp(const char *a, const char *b) { return implies(A(a), A(b)).kind; }

constexpr auto kProved = ProofStatus::Kind::Proved;
constexpr auto kDisproved = ProofStatus::Kind::Disproved;

TEST(AssertionParse, Connectives) {
  const auto a = A("(Z0 /\\ Z1) \\/ X0 => TRUE");
  EXPECT_EQ(a.kind, Assertion::Kind::Implies);
  EXPECT_EQ(a.children[0].kind, Assertion::Kind::Or);
  EXPECT_EQ(A("FALSE").kind, Assertion::Kind::False);
  const auto sum = A("0.6*Z0*Z1*Z2 + 0.8*X2*X3*X4*X6");
  EXPECT_EQ(sum.kind, Assertion::Kind::Expr);
  EXPECT_EQ(sum.expr.size(), 2u);
  EXPECT_TRUE(assertion_equivalent(A(to_string(sum).c_str()), sum));
  EXPECT_THROW(A("Z0 /\\"), SyntaxError);
}

TEST(Tableau, Membership) {
  const auto t = SignedTableau::build({parse_pauli("Z0*Z1"), parse_pauli("Z1*Z2")});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->rank(), 2u);
  EXPECT_EQ(t->membership(parse_pauli("Z0*Z2")), 1);
  EXPECT_EQ(t->membership(parse_pauli("-Z0*Z2")), -1);
  EXPECT_EQ(t->membership(parse_pauli("Z0")), 0);
  EXPECT_FALSE(SignedTableau::build({parse_pauli("Z0"), parse_pauli("X0")}));
  EXPECT_FALSE(SignedTableau::build({parse_pauli("Z0"), parse_pauli("-Z0")}));
  EXPECT_THROW(SignedTableau::build({parse_pauli("i*Z0")}), ImaginaryPhaseConjunct);
}

TEST(Simplify, Contradictions) {
  EXPECT_TRUE(assertion_simplify(A("Z0 /\\ X0")).is_false());
  EXPECT_TRUE(assertion_simplify(A("Z0 /\\ -Z0")).is_false());
  EXPECT_TRUE(assertion_equivalent(A("Z0 /\\ Z0*Z1"), A("Z0 /\\ Z1")));
  EXPECT_FALSE(assertion_equivalent(A("Z0"), A("-Z0")));
}

TEST(Implies, Instances) {
  EXPECT_EQ(imp("Z0 /\\ Z1", "Z0*Z1"), kProved);
  EXPECT_EQ(imp("Z0 /\\ Z1", "0.5*Z0 + 0.5*Z1"), kProved);
  EXPECT_EQ(imp("Z0 /\\ Z0*Z1", "Z1"), kProved);
  EXPECT_EQ(imp("(0.6*Z0 + 0.8*X0) /\\ Z1", "0.6*Z0 + 0.8*X0*Z1"), kProved);
  EXPECT_EQ(imp("Z0*Z1 /\\ Z1", "Z0"), kProved);
  EXPECT_EQ(imp("Z0", "TRUE"), kProved);
  EXPECT_EQ(imp("FALSE", "X0"), kProved);
  EXPECT_EQ(imp("Z0 /\\ Z1", "-Z0"), kDisproved);
  EXPECT_NE(imp("Z0", "Z1"), kProved);
  EXPECT_EQ(imp("Z0", "Z0 \\/ X0"), kProved);
  EXPECT_EQ(imp("Z0 \\/ Z1", "Z0 \\/ Z1"), kProved);
}

TEST(Weaken, CommutantReplacesAnticommutingLiterals) {
  const auto v = parse_pauli("X0");
  const auto w = commutant_weaken(A("Z0*Z1 /\\ Z0*Z2 /\\ Z3"), v);
  EXPECT_TRUE(assertion_commutes(w, v));
  EXPECT_TRUE(assertion_equivalent(w, A("Z1*Z2 /\\ Z3")));
  EXPECT_EQ(implies(A("Z0*Z1 /\\ Z0*Z2 /\\ Z3"), w).kind, kProved);
  EXPECT_TRUE(commutant_weaken(A("Z0"), v).is_true());
}

}  // namespace
}  // namespace qecv
