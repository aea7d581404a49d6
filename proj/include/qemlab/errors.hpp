// Copyright 2026 The qemlab Authors
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

#ifndef QEMLAB_ERRORS_HPP
#define QEMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qemlab {

// Precondition violations on plain arguments throw std::invalid_argument.
// The types below are the domain failures callers are expected to handle.

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class QubitCapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Zero variance, zero denominators and similar statistics that cannot be formed.
class DegenerateStatistics : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IllConditionedCalibration : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class EstimationFloorBreached : public std::runtime_error {
   public:
    EstimationFloorBreached(double one_minus_p, double floor)
        : std::runtime_error("estimation floor breached: 1-p = " + std::to_string(one_minus_p) +
                             " < " + std::to_string(floor)),
          one_minus_p_(one_minus_p) {}
    double one_minus_p() const { return one_minus_p_; }

   private:
    double one_minus_p_;
};

}  // namespace qemlab

#endif  // QEMLAB_ERRORS_HPP
