// Copyright 2026 The qillum Authors
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

#ifndef QILLUM_ERRORS_HPP
#define QILLUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qillum {

/// Raised when a Fock truncation leaks more probability than allowed.
/// Carries a dimension that would have been adequate.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int suggested_dim)
      : std::runtime_error(what), suggested_dim_(suggested_dim) {}

  int suggested_dim() const noexcept { return suggested_dim_; }

 private:
  int suggested_dim_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qillum

#endif  // QILLUM_ERRORS_HPP
