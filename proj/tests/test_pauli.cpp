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

#include "brute.hpp"
#include "qecv/error.hpp"
#include "qecv/pauli.hpp"

namespace qecv {
namespace {

SignedPauli P(const char *s) { return parse_pauli(s); }

TEST(Pauli, YIsIXZ) {
  // Y = i X Z, so X*Z = -i Y.
  EXPECT_EQ(mul_pauli(P("X0"), P("Z0")), P("-iY0"));
  EXPECT_EQ(mul_pauli(P("Z0"), P("X0")), P("iY0"));
  EXPECT_EQ(mul_pauli(P("Y0"), P("Y0")), SignedPauli::identity());
  EXPECT_TRUE((brute::pauli(P("Y0"), 1) - brute::Y2()).norm() < 1e-15);
}

TEST(Pauli, QubitZeroIsLowBit) {
  const auto m = brute::pauli(P("X0"), 2);
  EXPECT_EQ(m(1, 0), brute::C(1.0));  // |00> -> |01>
  EXPECT_TRUE((pauli_to_matrix(P("X0"), 2) - m).norm() < 1e-15);
}

TEST(Pauli, Commutation) {
  EXPECT_TRUE(commutes(P("Z0*Z1"), P("X0*X1")));
  EXPECT_FALSE(commutes(P("Z0"), P("X0*X1")));
  EXPECT_TRUE(commutes(P("Z0"), P("X1")));
}

TEST(Pauli, TextRoundTrip) {
  for (const char *s : {"Z0*Z1", "-X2*Y3", "iZ0", "-iX0*Z5", "I", "-I"}) {
    EXPECT_EQ(to_string(P(s)), s) << s;
  }
  EXPECT_EQ(to_string(P("Z4 * Z9 * Z13")), "Z4*Z9*Z13");
  EXPECT_THROW(P("Q0"), SyntaxError);
  EXPECT_EQ(P("i*Z0"), P("iZ0"));
}

TEST(Pauli, ExprCanonical) {
  const auto a = parse_expr("0.6*Z0*Z1*Z2 + 0.8*X2*X3*X4*X6");
  EXPECT_EQ(a.size(), 2u);
  const auto b = parse_expr("0.8*X2*X3*X4*X6 + 0.6*Z0*Z1*Z2");
  EXPECT_TRUE(a.approx_equal(b, 1e-15));
  const auto zero = expr_add(a, a.scaled(-1.0));
  EXPECT_TRUE(zero.is_zero());
}

TEST(Pauli, TermCapThrows) {
  const auto a = parse_expr("X0 + Z0");
  const auto b = parse_expr("X1 + Z1");
  EXPECT_EQ(expr_mul(a, b).size(), 4u);
  EXPECT_THROW(expr_mul(a, b, 3), TermExplosion);
}

TEST(Gates, CliffordConjugation) {
  const auto h = GateApp::named(GateKind::H, {0});
  EXPECT_EQ(conjugate_by_gate(h, P("X0")), P("Z0"));
  EXPECT_EQ(conjugate_by_gate(h, P("Y0")), P("-Y0"));
  const auto cx = GateApp::named(GateKind::CNOT, {0, 1});
  EXPECT_EQ(conjugate_by_gate(cx, P("X0")), P("X0*X1"));
  EXPECT_EQ(conjugate_by_gate(cx, P("Z1")), P("Z0*Z1"));
  EXPECT_EQ(conjugate_by_gate(cx, P("Z0")), P("Z0"));
  const auto s = GateApp::named(GateKind::S, {0});
  EXPECT_EQ(conjugate_by_gate(s, P("X0")), P("Y0"));
}

TEST(Gates, TIsNotClifford) {
  const auto t = GateApp::named(GateKind::T, {0});
  EXPECT_FALSE(is_clifford(t));
  EXPECT_THROW(conjugate_by_gate(t, P("X0")), NonCliffordGate);
  const auto c = expr_conjugate(std::vector<GateApp>{t}, StabilizerExpr::from_pauli(P("X0")));
  const auto want = parse_expr("0.7071067811865476*X0 + 0.7071067811865476*Y0");
  EXPECT_TRUE(c.approx_equal(want, 1e-12)) << to_string(c);
}

TEST(Gates, Arity) {
  EXPECT_THROW(check_gate(GateApp::named(GateKind::CNOT, {0})), ArityMismatch);
  EXPECT_THROW(check_gate(GateApp::named(GateKind::H, {0, 1})), ArityMismatch);
  EXPECT_EQ(gate_from_name("CX"), GateKind::CNOT);
  EXPECT_FALSE(gate_from_name("CCX").has_value());
}

TEST(Gates, InlinePauliUnitary) {
  const auto g = GateApp::inline_expr(StabilizerExpr::from_pauli(P("Z4*Z9*Z13")), {4, 9, 13});
  EXPECT_TRUE(is_clifford(g));
  EXPECT_EQ(conjugate_by_gate(g, P("X0*X1*X2*X4")), P("-X0*X1*X2*X4"));
  EXPECT_EQ(conjugate_by_gate(g, P("Z9")), P("Z9"));
}

TEST(Packed, MatchesMapForm) {
  brute::Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.pauli(70), b = gen.pauli(70);
    auto pa = pack(a, 70);
    EXPECT_EQ(unpack(pa), a);
    EXPECT_EQ(commutes_packed(pa, pack(b, 70)), commutes(a, b));
    mul_packed_inplace(pa, pack(b, 70));
    EXPECT_EQ(unpack(pa), mul_pauli(a, b));
  }
}

TEST(Expansion, CapExceeded) {
  EXPECT_THROW(pauli_to_matrix(P("Z0"), 13), OracleCapExceeded);
}

}  // namespace
}  // namespace qecv
