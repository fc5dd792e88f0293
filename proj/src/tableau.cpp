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

#include <algorithm>
#include <bit>
#include <numeric>

#include "qecv/assertion.hpp"
#include "qecv/error.hpp"

namespace qecv {

namespace {

bool has_bit(const PackedPauli &p, std::size_t bit) {
  const std::size_t q = bit >> 1;
  if ((q >> 6) >= p.words()) return false;
  return (bit & 1) ? p.zbit(q) : p.xbit(q);
}

// Lowest set bit in the 2q / 2q+1 ordering.
std::size_t lowest_bit(const PackedPauli &p) {
  for (std::size_t w = 0; w < p.words(); ++w) {
    const std::uint64_t any = p.x[w] | p.z[w];
    if (!any) continue;
    const std::size_t q = w * 64 + std::countr_zero(any);
    return p.xbit(q) ? 2 * q : 2 * q + 1;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

std::optional<SignedTableau> SignedTableau::build(
    const std::vector<SignedPauli> &gens) {
  std::size_t n = 1;
  for (const auto &g : gens) {
    if (!g.is_hermitian()) {
      throw ImaginaryPhaseConjunct(to_string(g) + " cannot be a conjunct");
    }
    n = std::max<std::size_t>(n, g.width());
  }
  std::vector<PackedPauli> packed;
  packed.reserve(gens.size());
  for (const auto &g : gens) packed.push_back(pack(g, n));
  for (std::size_t i = 0; i < packed.size(); ++i) {
    for (std::size_t j = i + 1; j < packed.size(); ++j) {
      if (!commutes_packed(packed[i], packed[j])) return std::nullopt;
    }
  }
  SignedTableau t;
  for (std::size_t i = 0; i < packed.size(); ++i) {
    PackedPauli p = packed[i];
    for (std::size_t r = 0; r < t.rref_.size(); ++r) {
      if (has_bit(p, t.pivots_[r])) mul_packed_inplace(p, t.rref_[r]);
    }
    if (p.is_identity_letters()) {
      if ((p.phase_exp & 3) == 2) return std::nullopt;
      continue;
    }
    const std::size_t pivot = lowest_bit(p);
    for (auto &row : t.rref_) {
      if (has_bit(row, pivot)) mul_packed_inplace(row, p);
    }
    t.rref_.push_back(std::move(p));
    t.pivots_.push_back(pivot);
    t.rows_.push_back(gens[i]);
  }
  return t;
}

SignedPauli SignedTableau::reduce(const SignedPauli &p) const {
  std::size_t n = std::max<std::size_t>(p.width(), 1);
  for (const auto &r : rref_) n = std::max(n, r.words() * 64);
  PackedPauli acc = pack(p, n);
  for (std::size_t r = 0; r < rref_.size(); ++r) {
    if (has_bit(acc, pivots_[r])) mul_packed_inplace(acc, rref_[r]);
  }
  return unpack(acc);
}

int SignedTableau::membership(const SignedPauli &p) const {
  const auto r = reduce(p);
  if (!r.has_identity_letters()) return 0;
  if (r.phase_exp() == 0) return 1;
  if (r.phase_exp() == 2) return -1;
  return 0;
}

StabilizerExpr SignedTableau::reduce(const StabilizerExpr &e,
                                     std::size_t max_terms) const {
  std::vector<Term> terms;
  terms.reserve(e.size());
  for (const auto &t : e.terms()) terms.push_back({t.coeff, reduce(t.pauli)});
  return StabilizerExpr::from_terms(std::move(terms), max_terms);
}

bool SignedTableau::same_group(const SignedTableau &o) const {
  if (rank() != o.rank()) return false;
  return std::all_of(o.rows_.begin(), o.rows_.end(),
                     [&](const SignedPauli &g) { return membership(g) == 1; });
}

std::vector<SignedPauli> SignedTableau::echelon() const {
  std::vector<std::size_t> order(rref_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<SignedPauli> out;
  for (std::size_t i : order) out.push_back(unpack(rref_[i]));
  return out;
}

std::optional<SignedTableau> conj_tableau(const std::vector<SignedPauli> &gens) {
  return SignedTableau::build(gens);
}

}  // namespace qecv
