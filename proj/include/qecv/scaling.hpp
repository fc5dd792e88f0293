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

#ifndef QECV_SCALING_HPP
#define QECV_SCALING_HPP

#include <vector>

#include "qecv/hoare.hpp"

namespace qecv {

struct ScalingRow {
  int d = 0;
  /// Best-of-repeats wall time for verifying every repetition triple.
  double seconds = 0.0;
  /// Sum of program_stats statement counts over the suite's programs.
  int statements = 0;
  int triples = 0;
  int verified = 0;
};

/// Symbolic verification times of the repetition suite for d = 3, 5, ..., dmax.
/// Program generation is outside the timed region.
std::vector<ScalingRow> repetition_scaling(int dmax, int repeats = 3,
                                           const VerifyConfig &cfg = {});

/// Least-squares slope of log(seconds) against log(d).
double fit_exponent(const std::vector<ScalingRow> &rows);

}  // namespace qecv

#endif  // QECV_SCALING_HPP
