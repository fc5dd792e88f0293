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

#ifndef QECV_KERNELS_HPP
#define QECV_KERNELS_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qecv/pauli.hpp"

// Dense density-matrix kernels. Every kernel has a plain serial reference and
// an OpenMP version; both produce identical results up to summation order.
// Basis index bit q is qubit q.

namespace qecv::kernels {

enum class Exec { Serial, Parallel };

/// Bit masks of a Pauli string: P|x> = i^phase (-1)^popcount(x & z) |x ^ x>.
struct PauliMask {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int phase = 0;  // phase exponent plus the number of Y letters
};

PauliMask make_mask(const SignedPauli &p);

/// U rho U^dagger for a 2^k x 2^k matrix U acting on `qubits` (local bit j is
/// qubits[j]).
Eigen::MatrixXcd apply_local(const Eigen::MatrixXcd &rho, const Eigen::MatrixXcd &u,
                             const std::vector<Qubit> &qubits, Exec exec = Exec::Parallel);

/// P * m.
Eigen::MatrixXcd pauli_left(const Eigen::MatrixXcd &m, const PauliMask &p,
                            Exec exec = Exec::Parallel);
/// m * P.
Eigen::MatrixXcd pauli_right(const Eigen::MatrixXcd &m, const PauliMask &p,
                             Exec exec = Exec::Parallel);
/// A * m for a Pauli-sum A.
Eigen::MatrixXcd expr_left(const Eigen::MatrixXcd &m, const StabilizerExpr &a,
                           Exec exec = Exec::Parallel);

/// M rho M with M = (I + sign * P) / 2.
Eigen::MatrixXcd project(const Eigen::MatrixXcd &rho, const PauliMask &p, int sign,
                         Exec exec = Exec::Parallel);

/// |0><0| rho |0><0| + |0><1| rho |1><0| on qubit q.
Eigen::MatrixXcd reset(const Eigen::MatrixXcd &rho, Qubit q, Exec exec = Exec::Parallel);

/// Real part of the trace.
double trace(const Eigen::MatrixXcd &rho, Exec exec = Exec::Parallel);

/// Number of qubits of a 2^n x 2^n matrix.
int qubits_of(const Eigen::MatrixXcd &m);

}  // namespace qecv::kernels

#endif  // QECV_KERNELS_HPP
