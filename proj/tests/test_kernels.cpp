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
#include "qecv/kernels.hpp"

namespace qecv::kernels {
namespace {

brute::Mat random_rho(brute::Gen &g, int n) {
  const std::size_t dim = std::size_t{1} << n;
  brute::Mat a(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) a(r, c) = g.complex();
  }
  brute::Mat rho = a * a.adjoint();
  return rho / rho.trace().real();
}

TEST(Kernels, PauliMultiplyMatchesReference) {
  brute::Gen g(201);
  for (int i = 0; i < 50; ++i) {
    const int n = g.uniform(1, 5);
    const auto p = g.pauli(n);
    const auto m = random_rho(g, n);
    const auto ref = brute::pauli(p, n);
    for (Exec e : {Exec::Serial, Exec::Parallel}) {
      EXPECT_LT((pauli_left(m, make_mask(p), e) - ref * m).norm(), 1e-12);
      EXPECT_LT((pauli_right(m, make_mask(p), e) - m * ref).norm(), 1e-12);
    }
  }
}

TEST(Kernels, ProjectMatchesReference) {
  brute::Gen g(202);
  for (int i = 0; i < 50; ++i) {
    const int n = g.uniform(1, 5);
    const auto p = g.pauli(n, false);
    const auto m = random_rho(g, n);
    const int sign = g.uniform(0, 1) ? 1 : -1;
    const std::size_t dim = std::size_t{1} << n;
    const brute::Mat proj =
        (brute::Mat::Identity(dim, dim) + double(sign) * brute::pauli(p, n)) / 2.0;
    const brute::Mat want = proj * m * proj;
    for (Exec e : {Exec::Serial, Exec::Parallel}) {
      EXPECT_LT((project(m, make_mask(p), sign, e) - want).norm(), 1e-12);
    }
  }
}

TEST(Kernels, ApplyLocalMatchesReference) {
  brute::Gen g(203);
  for (int i = 0; i < 50; ++i) {
    const int n = g.uniform(2, 5);
    const auto gate = g.clifford(n);
    const auto m = random_rho(g, n);
    const auto u = brute::gate(gate, n);
    const auto local = brute::gate(
        GateApp::named(gate.kind, gate.operands.size() == 1 ? std::vector<Qubit>{0}
                                                            : std::vector<Qubit>{0, 1}),
        static_cast<int>(gate.operands.size()));
    for (Exec e : {Exec::Serial, Exec::Parallel}) {
      EXPECT_LT((apply_local(m, local, gate.operands, e) - u * m * u.adjoint()).norm(), 1e-12);
    }
  }
}

TEST(Kernels, ResetMatchesReference) {
  brute::Gen g(204);
  for (int i = 0; i < 30; ++i) {
    const int n = g.uniform(1, 5);
    const Qubit q = static_cast<Qubit>(g.uniform(0, n - 1));
    const auto m = random_rho(g, n);
    brute::Mat lower = brute::Mat::Zero(2, 2);
    lower(0, 1) = 1.0;  // |0><1|
    const auto k0 = brute::proj(q, 0, n), k1 = brute::embed1(lower, q, n);
    const brute::Mat want = k0 * m * k0.adjoint() + k1 * m * k1.adjoint();
    for (Exec e : {Exec::Serial, Exec::Parallel}) {
      EXPECT_LT((reset(m, q, e) - want).norm(), 1e-12);
    }
    EXPECT_NEAR(trace(reset(m, q)), 1.0, 1e-12);
  }
}

TEST(Kernels, SerialEqualsParallelOnLargerStates) {
  brute::Gen g(205);
  const int n = 9;
  const auto m = random_rho(g, n);
  for (int i = 0; i < 5; ++i) {
    const auto p = make_mask(g.pauli(n, false));
    EXPECT_LT((project(m, p, 1, Exec::Serial) - project(m, p, 1, Exec::Parallel)).norm(), 1e-12);
    EXPECT_NEAR(trace(m, Exec::Serial), trace(m, Exec::Parallel), 1e-12);
  }
  EXPECT_EQ(qubits_of(m), n);
}

}  // namespace
}  // namespace qecv::kernels
