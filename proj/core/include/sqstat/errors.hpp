// Copyright 2026 The sqstat Authors
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

#ifndef SQSTAT_ERRORS_HPP_
#define SQSTAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sqstat {

/// A parameter lies outside the domain of a formula (x <= 0, r < 0, NaN...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A request exceeds what the truncated Fock-space oracle is configured to
/// handle (r above r_max, |alpha|^2 too large for the dimension, ...).
class OracleRangeError : public std::out_of_range {
 public:
  explicit OracleRangeError(const std::string& what)
      : std::out_of_range(what) {}
};

/// A Bose factor 1/(e^mu - 1) with mu = 0 at infinite temperature.
class DivergenceError : public std::domain_error {
 public:
  explicit DivergenceError(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace sqstat

#endif  // SQSTAT_ERRORS_HPP_
