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

#include "noisycommit/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace noisycommit {

std::string to_string(Action a) { return a == Action::kA1 ? "a1" : "a2"; }

PayoffMatrix::PayoffMatrix(double u11, double u12, double u21, double u22)
    : u_{{{u11, u12}, {u21, u22}}} {
  for (const auto& row : u_) {
    for (double x : row) {
      if (!std::isfinite(x)) {
        throw InvalidArgument("payoff matrix entries must be finite");
      }
    }
  }
}

double PayoffMatrix::min_entry() const {
  return std::min({u11(), u12(), u21(), u22()});
}

double PayoffMatrix::max_entry() const {
  return std::max({u11(), u12(), u21(), u22()});
}

BinaryDist::BinaryDist(double p1) : p_{p1, 1.0 - p1} {
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    std::ostringstream msg;
    msg << "probability " << p1 << " outside [0, 1]";
    throw InvalidArgument(msg.str());
  }
}

BinaryDist::BinaryDist(double p1, double p2, bool) : p_{p1, p2} {}

BinaryDist BinaryDist::of(double p1, double p2) {
  if (!(p1 >= 0.0 && p2 >= 0.0) || std::abs(p1 + p2 - 1.0) > kProbTol) {
    std::ostringstream msg;
    msg << "(" << p1 << ", " << p2 << ") is not a probability vector";
    throw InvalidArgument(msg.str());
  }
  return BinaryDist(p1, p2, true);
}

BinaryDist BinaryDist::pure(Action a) {
  return a == Action::kA1 ? BinaryDist(1.0, 0.0, true)
                          : BinaryDist(0.0, 1.0, true);
}

std::string check_column_stochastic(const std::array<double, 4>& m) {
  static constexpr const char* kNames[] = {"(1,1)", "(1,2)", "(2,1)", "(2,2)"};
  for (std::size_t k = 0; k < 4; ++k) {
    if (!std::isfinite(m[k]) || m[k] < 0.0 || m[k] > 1.0) {
      std::ostringstream msg;
      msg << "entry " << kNames[k] << " = " << m[k] << " is not in [0, 1]";
      return msg.str();
    }
  }
  for (std::size_t col = 0; col < 2; ++col) {
    const double sum = m[col] + m[2 + col];
    if (std::abs(sum - 1.0) > kProbTol) {
      std::ostringstream msg;
      msg << "column " << col + 1 << " sums to " << sum
          << ", expected 1 (matrix must be column-stochastic)";
      return msg.str();
    }
  }
  return {};
}

}  // namespace noisycommit
