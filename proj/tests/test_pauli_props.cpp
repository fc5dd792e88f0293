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

// Randomized algebra checks against the Kronecker reference.

#include <gtest/gtest.h>

#include "brute.hpp"
#include "qecv/pauli.hpp"

namespace qecv {
namespace {

constexpr int kCases = 400;
constexpr double kTol = 1e-12;

TEST(PauliProps, GroupLaws) {
  brute::Gen gen(101);
  for (int i = 0; i < kCases; ++i) {
    const int n = gen.uniform(1, 8);
    const auto a = gen.pauli(n), b = gen.pauli(n), c = gen.pauli(n);
    EXPECT_EQ(mul_pauli(mul_pauli(a, b), c), mul_pauli(a, mul_pauli(b, c)));
    EXPECT_EQ(mul_pauli(a, SignedPauli::identity()), a);
    // a * a^dagger = I; the dagger conjugates the phase.
    EXPECT_TRUE(mul_pauli(a, a.with_phase(-a.phase_exp())).is_identity());
    const auto ab = mul_pauli(a, b), ba = mul_pauli(b, a);
    EXPECT_EQ(ab == ba, commutes(a, b));
    if (!commutes(a, b)) EXPECT_EQ(ab, ba.negated());
  }
}

TEST(PauliProps, ProductMatchesMatrix) {
  brute::Gen gen(102);
  for (int i = 0; i < kCases; ++i) {
    const int n = gen.uniform(1, 5);
    const auto a = gen.pauli(n), b = gen.pauli(n);
    const auto lhs = brute::pauli(mul_pauli(a, b), n);
    const brute::Mat rhs = brute::pauli(a, n) * brute::pauli(b, n);
    EXPECT_LT((lhs - rhs).norm(), kTol);
  }
}

TEST(PauliProps, CommutationMatchesMatrix) {
  brute::Gen gen(103);
  for (int i = 0; i < kCases; ++i) {
    const int n = gen.uniform(1, 5);
    const auto a = gen.pauli(n), b = gen.pauli(n);
    const auto ma = brute::pauli(a, n), mb = brute::pauli(b, n);
    EXPECT_EQ(commutes(a, b), (ma * mb - mb * ma).norm() < kTol);
  }
}

TEST(PauliProps, CliffordConjugationMatchesMatrix) {
  brute::Gen gen(104);
  for (int i = 0; i < kCases; ++i) {
    const int n = gen.uniform(1, 4);
    const auto g = gen.clifford(n);
    const auto p = gen.pauli(n);
    const auto u = brute::gate(g, n);
    const brute::Mat want = u * brute::pauli(p, n) * u.adjoint();
    EXPECT_LT((brute::pauli(conjugate_by_gate(g, p), n) - want).norm(), kTol)
        << to_string(g) << " on " << to_string(p);
  }
}

TEST(PauliProps, ExprConjugationMatchesMatrix) {
  brute::Gen gen(105);
  for (int i = 0; i < kCases / 4; ++i) {
    const int n = gen.uniform(1, 3);
    std::vector<GateApp> gates;
    for (int k = 0; k < 3; ++k) {
      gates.push_back(gen.uniform(0, 2) == 0
                          ? GateApp::named(GateKind::T, {Qubit(gen.uniform(0, n - 1))})
                          : gen.clifford(n));
    }
    const auto a = gen.expr(n, gen.uniform(1, 3));
    brute::Mat u = brute::Mat::Identity(1 << n, 1 << n);
    for (const auto &g : gates) u = (brute::gate(g, n) * u).eval();
    const auto got = brute::expr(expr_conjugate(gates, a), n);
    EXPECT_LT((got - u * brute::expr(a, n) * u.adjoint()).norm(), 1e-10);
  }
}

TEST(PauliProps, ExpansionReconstructs) {
  brute::Gen gen(106);
  for (int i = 0; i < kCases / 4; ++i) {
    const int n = gen.uniform(1, 4);
    const std::size_t dim = std::size_t{1} << n;
    brute::Mat m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = gen.complex();
    }
    EXPECT_LT((brute::expr(pauli_expand(m, n), n) - m).norm(), kTol);
  }
}

TEST(PauliProps, ExprMulMatchesMatrix) {
  brute::Gen gen(107);
  for (int i = 0; i < kCases / 4; ++i) {
    const int n = gen.uniform(1, 4);
    const auto a = gen.expr(n, 3), b = gen.expr(n, 3);
    const auto got = brute::expr(expr_mul(a, b), n);
    EXPECT_LT((got - brute::expr(a, n) * brute::expr(b, n)).norm(), 1e-10);
    EXPECT_LT((brute::expr(a.dagger(), n) - brute::expr(a, n).adjoint()).norm(), kTol);
  }
}

}  // namespace
}  // namespace qecv
