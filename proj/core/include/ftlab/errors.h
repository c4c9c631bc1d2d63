// Copyright 2026 The ftlab Authors
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

#ifndef FTLAB_ERRORS_H
#define FTLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace ftlab {

/// Bad argument: mismatched sizes, out-of-range probabilities, malformed labels.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested enumeration or dimension exceeds what is supported.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition on a value (not just its shape) was violated.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// An object could not be assembled. `stage()` names the offending part.
class ConstructionError : public std::runtime_error {
   public:
    ConstructionError(std::string stage, const std::string &what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}

    const std::string &stage() const noexcept { return stage_; }

   private:
    std::string stage_;
};

/// The function does not change sign over the search bracket.
class BracketingError : public std::runtime_error {
   public:
    BracketingError(const std::string &what, double lo, double hi, double f_lo, double f_hi)
        : std::runtime_error(what), lo_(lo), hi_(hi), f_lo_(f_lo), f_hi_(f_hi) {}

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    /// Ratio minus one at the endpoints; NaN where the ratio is undefined.
    double f_lo() const noexcept { return f_lo_; }
    double f_hi() const noexcept { return f_hi_; }

   private:
    double lo_, hi_, f_lo_, f_hi_;
};

/// Unknown code name, malformed config file, invalid range.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ftlab

#endif
