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

#ifndef QECV_TESTS_BRUTE_HPP
#define QECV_TESTS_BRUTE_HPP

// Reference matrices built from explicit 2x2 blocks and Kronecker products,
// plus seeded generators for property tests. Nothing here calls the
// library's own matrix code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "qecv/pauli.hpp"

namespace brute {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

inline Mat I2() { return Mat::Identity(2, 2); }
inline Mat X2() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Mat Z2() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
inline Mat Y2() {
  Mat m(2, 2);
  m << 0, C(0, -1), C(0, 1), 0;
  return m;
}
inline Mat H2() { return (X2() + Z2()) / std::sqrt(2.0); }
inline Mat S2() {
  Mat m(2, 2);
  m << 1, 0, 0, C(0, 1);
  return m;
}
inline Mat T2() {
  Mat m(2, 2);
  m << 1, 0, 0, std::polar(1.0, M_PI / 4);
  return m;
}

inline Mat letter(qecv::Letter l) {
  switch (l) {
    case qecv::Letter::X: return X2();
    case qecv::Letter::Z: return Z2();
    case qecv::Letter::Y: return Y2();
  }
  return I2();
}

/// Single-qubit operator u on qubit q of n: kron over qubits n-1 ... 0.
inline Mat embed1(const Mat &u, qecv::Qubit q, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) {
    const Mat f = static_cast<qecv::Qubit>(k) == q ? u : I2();
    out = Eigen::kroneckerProduct(out, f).eval();
  }
  return out;
}

inline Mat pauli(const qecv::SignedPauli &p, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) {
    const auto l = p.letter(static_cast<qecv::Qubit>(k));
    out = Eigen::kroneckerProduct(out, l ? letter(*l) : I2()).eval();
  }
  static const C ph[4] = {1.0, C(0, 1), -1.0, C(0, -1)};
  return ph[((p.phase_exp() % 4) + 4) % 4] * out;
}

inline Mat expr(const qecv::StabilizerExpr &e, int n) {
  const std::size_t dim = std::size_t{1} << n;
  Mat out = Mat::Zero(dim, dim);
  for (const auto &t : e.terms()) out += t.coeff * pauli(t.pauli, n);
  return out;
}

/// Projector |c><c| on qubit q, c in {0, 1}.
inline Mat proj(qecv::Qubit q, int c, int n) {
  Mat p = Mat::Zero(2, 2);
  p(c, c) = 1.0;
  return embed1(p, q, n);
}

/// Two-qubit controlled-u with control c and target t.
inline Mat controlled(const Mat &u, qecv::Qubit c, qecv::Qubit t, int n) {
  return proj(c, 0, n) + proj(c, 1, n) * embed1(u, t, n);
}

inline Mat gate(const qecv::GateApp &g, int n) {
  using qecv::GateKind;
  const auto &q = g.operands;
  switch (g.kind) {
    case GateKind::X: return embed1(X2(), q[0], n);
    case GateKind::Y: return embed1(Y2(), q[0], n);
    case GateKind::Z: return embed1(Z2(), q[0], n);
    case GateKind::H: return embed1(H2(), q[0], n);
    case GateKind::S: return embed1(S2(), q[0], n);
    case GateKind::T: return embed1(T2(), q[0], n);
    case GateKind::CNOT: return controlled(X2(), q[0], q[1], n);
    case GateKind::CZ: return controlled(Z2(), q[0], q[1], n);
    case GateKind::Expr: return expr(*g.expr, n);
  }
  return Mat();
}

// ---------------------------------------------------------------------------
// Seeded generators.

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  C complex() { return {real(), real()}; }

  qecv::SignedPauli pauli(int n, bool any_phase = true) {
    std::map<qecv::Qubit, qecv::Letter> ls;
    for (int q = 0; q < n; ++q) {
      const int l = uniform(0, 3);
      if (l) ls[static_cast<qecv::Qubit>(q)] = static_cast<qecv::Letter>(l);
    }
    return {any_phase ? uniform(0, 3) : 2 * uniform(0, 1), ls};
  }

  qecv::StabilizerExpr expr(int n, int terms) {
    std::vector<qecv::Term> ts;
    for (int i = 0; i < terms; ++i) ts.push_back({complex(), pauli(n).unsigned_part()});
    return qecv::StabilizerExpr::from_terms(ts);
  }

  qecv::GateApp clifford(int n) {
    using qecv::GateKind;
    static const GateKind one[] = {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H,
                                   GateKind::S};
    if (n >= 2 && uniform(0, 2) == 0) {
      const auto a = static_cast<qecv::Qubit>(uniform(0, n - 1));
      auto b = static_cast<qecv::Qubit>(uniform(0, n - 2));
      if (b >= a) ++b;
      return qecv::GateApp::named(uniform(0, 1) ? GateKind::CNOT : GateKind::CZ, {a, b});
    }
    return qecv::GateApp::named(one[uniform(0, 4)], {static_cast<qecv::Qubit>(uniform(0, n - 1))});
  }

  std::mt19937_64 &engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace brute

#endif  // QECV_TESTS_BRUTE_HPP
