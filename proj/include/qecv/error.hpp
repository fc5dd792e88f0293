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

#ifndef QECV_ERROR_HPP
#define QECV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qecv {

/// Base class of every error raised by the library. `kind()` is a stable
/// machine-readable tag used in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string &msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string &kind() const { return kind_; }

 private:
  std::string kind_;
};

#define QECV_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string &msg) : Error(#Name, msg) {}  \
  };

QECV_DEFINE_ERROR(TermExplosion)
QECV_DEFINE_ERROR(OracleCapExceeded)
QECV_DEFINE_ERROR(NonCliffordGate)
QECV_DEFINE_ERROR(UndeclaredVariable)
QECV_DEFINE_ERROR(ArityMismatch)
QECV_DEFINE_ERROR(MissingDecoder)
QECV_DEFINE_ERROR(ImaginaryPhaseConjunct)
QECV_DEFINE_ERROR(UnsatisfiableAssertion)
QECV_DEFINE_ERROR(UndeclaredSVar)
QECV_DEFINE_ERROR(MissingInvariant)
QECV_DEFINE_ERROR(UnresolvedSigma)
QECV_DEFINE_ERROR(InvalidDistance)
QECV_DEFINE_ERROR(AmbiguousSyndrome)
QECV_DEFINE_ERROR(InputError)

#undef QECV_DEFINE_ERROR

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string &msg, int line, int column)
      : Error("SyntaxError", std::to_string(line) + ":" +
                                 std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qecv

#endif  // QECV_ERROR_HPP
