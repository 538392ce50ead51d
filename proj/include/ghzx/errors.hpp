/* Copyright 2026 The ghzx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghzx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The two families handed to map_between_families disagree on a pairwise
// commutation value; (j, k) is the offending index pair.
struct InnerProductMismatch : Error {
  std::size_t j, k;
  InnerProductMismatch(std::size_t j_, std::size_t k_)
      : Error("inner product mismatch between families at pair (" + std::to_string(j_) + ", " +
              std::to_string(k_) + ")"),
        j(j_),
        k(k_) {}
};

// The two families have different linear-dependency patterns; `combination`
// is a coefficient vector that annihilates one family but not the other.
struct DependencyMismatch : Error {
  std::string combination;
  explicit DependencyMismatch(std::string combo)
      : Error("linear dependency mismatch between families, witness combination " + combo),
        combination(std::move(combo)) {}
};

struct NotFullLocalRank : Error {
  NotFullLocalRank() : Error("state does not have full local ranks") {}
};

struct TooFewParties : Error {
  explicit TooFewParties(std::size_t m)
      : Error("operation requires at least 3 parties, got " + std::to_string(m)) {}
};

struct WrongPartyCount : Error {
  explicit WrongPartyCount(std::size_t m)
      : Error("operation requires exactly 3 parties, got " + std::to_string(m)) {}
};

struct NotSymplectic : Error {
  NotSymplectic() : Error("linear map does not preserve the symplectic form") {}
};

struct ImageOutsideTarget : Error {
  std::size_t index;
  explicit ImageOutsideTarget(std::size_t i)
      : Error("witness image " + std::to_string(i) + " lies outside the target stabilizer group"),
        index(i) {}
};

struct NotInjective : Error {
  NotInjective() : Error("witness images are linearly dependent") {}
};

struct CircuitCrossesParty : Error {
  explicit CircuitCrossesParty(const std::string& detail)
      : Error("circuit gate crosses a party boundary: " + detail) {}
};

// State-file problems surfaced by the parser.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct WrongGeneratorCount : Error {
  WrongGeneratorCount(std::size_t got, std::size_t want)
      : Error("state file lists " + std::to_string(got) + " generators, expected " +
              std::to_string(want)) {}
};

struct NotIndependent : Error {
  NotIndependent() : Error("generators are linearly dependent") {}
};

struct NotIsotropic : Error {
  NotIsotropic() : Error("generators do not pairwise commute") {}
};

// A condition the underlying theory guarantees failed to hold; indicates a
// bug rather than bad input.
struct InternalCheckFailure : Error {
  explicit InternalCheckFailure(const std::string& what_check)
      : Error("internal invariant violated: " + what_check) {}
};

inline void internal_check(bool ok, const char* what_check) {
  if (!ok) {
    throw InternalCheckFailure(what_check);
  }
}

}  // namespace ghzx
