// Copyright 2026 The noisycommit Authors.
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

#ifndef NOISYCOMMIT_TYPES_HPP_
#define NOISYCOMMIT_TYPES_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace noisycommit {

// Comparison tolerance used wherever a post-condition says "within".
inline constexpr double kEps = 1e-9;

// Tolerance on probability normalization (column sums, p1 + p2).
inline constexpr double kProbTol = 1e-12;

// Both players choose from {a1, a2}. Observations live in the same alphabet.
enum class Action : int { kA1 = 0, kA2 = 1 };

inline constexpr std::array<Action, 2> kActions = {Action::kA1, Action::kA2};

constexpr std::size_t index(Action a) { return static_cast<std::size_t>(a); }
constexpr Action other(Action a) {
  return a == Action::kA1 ? Action::kA2 : Action::kA1;
}
// 1-based label ("a1"/"a2") for reports.
std::string to_string(Action a);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The 2x2 payoff matrix u. Rows are the follower's actions (maximizer),
// columns the leader's actions (minimizer).
class PayoffMatrix {
 public:
  PayoffMatrix(double u11, double u12, double u21, double u22);

  // 0-based access: (row, col).
  double operator()(std::size_t row, std::size_t col) const {
    return u_[row][col];
  }
  double operator()(Action row, Action col) const {
    return u_[index(row)][index(col)];
  }

  double u11() const { return u_[0][0]; }
  double u12() const { return u_[0][1]; }
  double u21() const { return u_[1][0]; }
  double u22() const { return u_[1][1]; }

  double min_entry() const;
  double max_entry() const;

  // u11 - u12 - u21 + u22.
  double cross_sum() const { return u11() - u12() - u21() + u22(); }

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  std::array<std::array<double, 2>, 2> u_;
};

// A probability measure on {a1, a2}.
class BinaryDist {
 public:
  // Pure a1.
  BinaryDist() = default;
  // P(a1) = p1, P(a2) = 1 - p1. Requires p1 in [0, 1].
  explicit BinaryDist(double p1);
  // Both masses given explicitly; they must sum to one within kProbTol.
  static BinaryDist of(double p1, double p2);
  static BinaryDist pure(Action a);

  double p1() const { return p_[0]; }
  double p2() const { return p_[1]; }
  double operator[](Action a) const { return p_[index(a)]; }

  friend bool operator==(const BinaryDist&, const BinaryDist&) = default;

 private:
  BinaryDist(double p1, double p2, bool);
  std::array<double, 2> p_ = {1.0, 0.0};
};

// Validates a column-stochastic 2x2 matrix given row-major; returns an empty
// string on success or a message naming the offending entry/column.
std::string check_column_stochastic(const std::array<double, 4>& m);

}  // namespace noisycommit

#endif  // NOISYCOMMIT_TYPES_HPP_
