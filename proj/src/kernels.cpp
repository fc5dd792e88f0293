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

#include "qecv/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace qecv::kernels {

using Eigen::Index;
using Eigen::MatrixXcd;

int qubits_of(const MatrixXcd &m) {
  const auto dim = static_cast<std::uint64_t>(m.rows());
  if (dim == 0 || (dim & (dim - 1)) || m.cols() != m.rows()) {
    throw std::invalid_argument("matrix is not 2^n x 2^n");
  }
  return std::countr_zero(dim);
}

PauliMask make_mask(const SignedPauli &p) {
  PauliMask m;
  m.phase = p.phase_exp();
  for (const auto &[q, l] : p.letters()) {
    if (q >= 63) throw std::out_of_range("dense kernels support at most 63 qubits");
    const auto bit = std::uint64_t{1} << q;
    if (static_cast<int>(l) & 1) m.x |= bit;
    if (static_cast<int>(l) & 2) m.z |= bit;
    if (l == Letter::Y) ++m.phase;
  }
  return m;
}

namespace {

// phi(x) with P|x> = phi(x) |x ^ mask.x>.
inline Complex phi(const PauliMask &p, Complex base, std::uint64_t x) {
  return (std::popcount(x & p.z) & 1) ? -base : base;
}

struct LocalLayout {
  std::vector<std::uint64_t> offsets;  // global offset of each local index
  std::uint64_t mask = 0;
};

LocalLayout layout_of(const std::vector<Qubit> &qubits) {
  LocalLayout l;
  const std::size_t k = qubits.size();
  l.offsets.assign(std::size_t{1} << k, 0);
  for (std::size_t j = 0; j < k; ++j) l.mask |= std::uint64_t{1} << qubits[j];
  for (std::size_t li = 0; li < l.offsets.size(); ++li) {
    std::uint64_t off = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((li >> j) & 1) off |= std::uint64_t{1} << qubits[j];
    }
    l.offsets[li] = off;
  }
  return l;
}

// m <- U m on the local qubits, one column at a time.
void left_local_column(MatrixXcd &m, Index c, const MatrixXcd &u, const LocalLayout &l,
                       Eigen::VectorXcd &buf, Eigen::VectorXcd &out) {
  const auto dim = static_cast<std::uint64_t>(m.rows());
  const Index local = static_cast<Index>(l.offsets.size());
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (b & l.mask) continue;
    for (Index i = 0; i < local; ++i) buf[i] = m(static_cast<Index>(b | l.offsets[i]), c);
    out.noalias() = u * buf;
    for (Index i = 0; i < local; ++i) m(static_cast<Index>(b | l.offsets[i]), c) = out[i];
  }
}

void left_local(MatrixXcd &m, const MatrixXcd &u, const LocalLayout &l, Exec exec) {
  const Index local = static_cast<Index>(l.offsets.size());
  if (exec == Exec::Serial) {
    Eigen::VectorXcd buf(local), out(local);
    for (Index c = 0; c < m.cols(); ++c) left_local_column(m, c, u, l, buf, out);
    return;
  }
#pragma omp parallel
  {
    Eigen::VectorXcd buf(local), out(local);
#pragma omp for schedule(static)
    for (Index c = 0; c < m.cols(); ++c) left_local_column(m, c, u, l, buf, out);
  }
}

}  // namespace

MatrixXcd apply_local(const MatrixXcd &rho, const MatrixXcd &u,
                      const std::vector<Qubit> &qubits, Exec exec) {
  qubits_of(rho);
  if (u.rows() != (Index{1} << qubits.size()) || u.cols() != u.rows()) {
    throw std::invalid_argument("local unitary size does not match operand count");
  }
  const auto l = layout_of(qubits);
  MatrixXcd x = rho;
  left_local(x, u, l, exec);
  MatrixXcd y = x.adjoint();
  left_local(y, u, l, exec);
  return y.adjoint();
}

MatrixXcd pauli_left(const MatrixXcd &m, const PauliMask &p, Exec exec) {
  const Index dim = m.rows();
  const Complex base = phase_value(p.phase);
  MatrixXcd out(m.rows(), m.cols());
  if (exec == Exec::Serial) {
    for (Index c = 0; c < m.cols(); ++c) {
      for (Index y = 0; y < dim; ++y) {
        const auto src = static_cast<std::uint64_t>(y) ^ p.x;
        out(y, c) = phi(p, base, src) * m(static_cast<Index>(src), c);
      }
    }
    return out;
  }
#pragma omp parallel for schedule(static)
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index y = 0; y < dim; ++y) {
      const auto src = static_cast<std::uint64_t>(y) ^ p.x;
      out(y, c) = phi(p, base, src) * m(static_cast<Index>(src), c);
    }
  }
  return out;
}

MatrixXcd pauli_right(const MatrixXcd &m, const PauliMask &p, Exec exec) {
  const Complex base = phase_value(p.phase);
  MatrixXcd out(m.rows(), m.cols());
  if (exec == Exec::Serial) {
    for (Index c = 0; c < m.cols(); ++c) {
      const auto src = static_cast<Index>(static_cast<std::uint64_t>(c) ^ p.x);
      const Complex f = phi(p, base, static_cast<std::uint64_t>(c));
      for (Index r = 0; r < m.rows(); ++r) out(r, c) = m(r, src) * f;
    }
    return out;
  }
#pragma omp parallel for schedule(static)
  for (Index c = 0; c < m.cols(); ++c) {
    const auto src = static_cast<Index>(static_cast<std::uint64_t>(c) ^ p.x);
    const Complex f = phi(p, base, static_cast<std::uint64_t>(c));
    for (Index r = 0; r < m.rows(); ++r) out(r, c) = m(r, src) * f;
  }
  return out;
}

MatrixXcd expr_left(const MatrixXcd &m, const StabilizerExpr &a, Exec exec) {
  MatrixXcd out = MatrixXcd::Zero(m.rows(), m.cols());
  for (const auto &t : a.terms()) out += t.coeff * pauli_left(m, make_mask(t.pauli), exec);
  return out;
}

MatrixXcd project(const MatrixXcd &rho, const PauliMask &p, int sign, Exec exec) {
  const double s = sign < 0 ? -1.0 : 1.0;
  if (exec == Exec::Serial) {
    const MatrixXcd half = 0.5 * (rho + s * pauli_left(rho, p, Exec::Serial));
    return 0.5 * (half + s * pauli_right(half, p, Exec::Serial));
  }
  const Index dim = rho.rows();
  const Complex base = phase_value(p.phase);
  MatrixXcd out(dim, dim);
#pragma omp parallel for schedule(static)
  for (Index c = 0; c < dim; ++c) {
    const auto cu = static_cast<std::uint64_t>(c);
    const auto cs = static_cast<Index>(cu ^ p.x);
    const Complex fc = phi(p, base, cu);
    for (Index r = 0; r < dim; ++r) {
      const auto rs = static_cast<std::uint64_t>(r) ^ p.x;
      const Complex fr = phi(p, base, rs);
      const auto ri = static_cast<Index>(rs);
      out(r, c) = 0.25 * (rho(r, c) + s * fr * rho(ri, c) + s * rho(r, cs) * fc +
                          fr * rho(ri, cs) * fc);
    }
  }
  return out;
}

MatrixXcd reset(const MatrixXcd &rho, Qubit q, Exec exec) {
  const Index dim = rho.rows();
  const auto bit = std::uint64_t{1} << q;
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  auto body = [&](Index c) {
    const auto cu = static_cast<std::uint64_t>(c);
    if (cu & bit) return;
    const auto c1 = static_cast<Index>(cu | bit);
    for (Index r = 0; r < dim; ++r) {
      const auto ru = static_cast<std::uint64_t>(r);
      if (ru & bit) continue;
      out(r, c) = rho(r, c) + rho(static_cast<Index>(ru | bit), c1);
    }
  };
  if (exec == Exec::Serial) {
    for (Index c = 0; c < dim; ++c) body(c);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (Index c = 0; c < dim; ++c) body(c);
  return out;
}

double trace(const MatrixXcd &rho, Exec exec) {
  double t = 0.0;
  if (exec == Exec::Serial) {
    for (Index i = 0; i < rho.rows(); ++i) t += rho(i, i).real();
    return t;
  }
#pragma omp parallel for reduction(+ : t) schedule(static)
  for (Index i = 0; i < rho.rows(); ++i) t += rho(i, i).real();
  return t;
}

}  // namespace qecv::kernels
