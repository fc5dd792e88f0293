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

// Serial vs OpenMP density-matrix kernels. Argument is the qubit count.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "qecv/kernels.hpp"
#include "qecv/pauli.hpp"

namespace {

using qecv::kernels::Exec;

Eigen::MatrixXcd random_rho(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = {g(rng), g(rng)};
  }
  Eigen::MatrixXcd rho = a * a.adjoint();
  return rho / rho.trace().real();
}

qecv::SignedPauli zz_chain(int n) {
  std::vector<qecv::Qubit> qs;
  for (int q = 0; q < n; q += 2) qs.push_back(q);
  return qecv::SignedPauli::uniform(qecv::Letter::Z, qs);
}

Eigen::MatrixXcd cx_matrix() {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(4, 4);
  u(0, 0) = u(2, 2) = 1.0;
  u(1, 3) = u(3, 1) = 1.0;
  return u;
}

template <Exec E>
void BM_Project(benchmark::State &st) {
  const int n = static_cast<int>(st.range(0));
  const auto rho = random_rho(n);
  const auto mask = qecv::kernels::make_mask(zz_chain(n));
  for (auto _ : st) benchmark::DoNotOptimize(qecv::kernels::project(rho, mask, 1, E));
}

template <Exec E>
void BM_PauliLeft(benchmark::State &st) {
  const int n = static_cast<int>(st.range(0));
  const auto rho = random_rho(n);
  const auto mask = qecv::kernels::make_mask(qecv::SignedPauli::uniform(qecv::Letter::Y, {0, 1}));
  for (auto _ : st) benchmark::DoNotOptimize(qecv::kernels::pauli_left(rho, mask, E));
}

template <Exec E>
void BM_ApplyLocal(benchmark::State &st) {
  const int n = static_cast<int>(st.range(0));
  const auto rho = random_rho(n);
  const auto u = cx_matrix();
  const std::vector<qecv::Qubit> qs = {0, static_cast<qecv::Qubit>(n - 1)};
  for (auto _ : st) benchmark::DoNotOptimize(qecv::kernels::apply_local(rho, u, qs, E));
}

template <Exec E>
void BM_Reset(benchmark::State &st) {
  const int n = static_cast<int>(st.range(0));
  const auto rho = random_rho(n);
  for (auto _ : st) benchmark::DoNotOptimize(qecv::kernels::reset(rho, n / 2, E));
}

}  // namespace

BENCHMARK(BM_Project<Exec::Serial>)->DenseRange(6, 10, 2);
BENCHMARK(BM_Project<Exec::Parallel>)->DenseRange(6, 10, 2);
BENCHMARK(BM_PauliLeft<Exec::Serial>)->DenseRange(6, 10, 2);
BENCHMARK(BM_PauliLeft<Exec::Parallel>)->DenseRange(6, 10, 2);
BENCHMARK(BM_ApplyLocal<Exec::Serial>)->DenseRange(6, 10, 2);
BENCHMARK(BM_ApplyLocal<Exec::Parallel>)->DenseRange(6, 10, 2);
BENCHMARK(BM_Reset<Exec::Serial>)->DenseRange(6, 10, 2);
BENCHMARK(BM_Reset<Exec::Parallel>)->DenseRange(6, 10, 2);

BENCHMARK_MAIN();
