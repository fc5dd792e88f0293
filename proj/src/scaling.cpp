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

#include "qecv/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "qecv/corpus.hpp"

namespace qecv {

std::vector<ScalingRow> repetition_scaling(int dmax, int repeats, const VerifyConfig &cfg) {
  std::vector<ScalingRow> rows;
  for (int d = 3; d <= dmax; d += 2) {
    const auto suite = gen_repetition_suite(d);
    ScalingRow row;
    row.d = d;
    for (const auto &c : suite) {
      row.statements += program_stats(c.program).statement_count;
      row.triples += static_cast<int>(c.triples.size());
    }
    row.seconds = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, repeats); ++r) {
      int verified = 0;
      const auto start = std::chrono::steady_clock::now();
      for (const auto &c : suite) {
        VerifyConfig local = cfg;
        local.registry.insert(c.registry.begin(), c.registry.end());
        for (const auto &t : c.triples) {
          verified += verify_triple(t, local).status == VerificationOutcome::Status::Verified;
        }
      }
      const double s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      row.seconds = std::min(row.seconds, s);
      row.verified = verified;
    }
    rows.push_back(row);
  }
  return rows;
}

double fit_exponent(const std::vector<ScalingRow> &rows) {
  const double n = static_cast<double>(rows.size());
  if (rows.size() < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto &r : rows) {
    const double x = std::log(r.d), y = std::log(r.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace qecv
