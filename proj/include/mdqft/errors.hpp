// Copyright 2026 The mdqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace mdq {

/// Requested size exceeds the configured qubit or dense-matrix cap.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Malformed argument: bad gate operand, non-power-of-two extent, zero shots.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input file could not be read or does not match the expected format.
class ParseError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class BoundsError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Statevector and layout disagree on shape.
class LayoutError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input cannot be amplitude-encoded (zero norm).
class DegenerateInputError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace mdq
