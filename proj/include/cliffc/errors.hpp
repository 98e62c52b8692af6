// Copyright 2026 The cliffc Authors
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

#ifndef CLIFFC_ERRORS_HPP
#define CLIFFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cliffc {

/// Shape mismatch or out-of-range index.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotSymplecticError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A phase vector that no Clifford with the given symplectic part can carry.
struct InvalidPhaseVectorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidStabilizerSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonCommutingError : InvalidStabilizerSpecError {
    using InvalidStabilizerSpecError::InvalidStabilizerSpecError;
};

struct DependentGeneratorsError : InvalidStabilizerSpecError {
    using InvalidStabilizerSpecError::InvalidStabilizerSpecError;
};

/// Malformed text input. `line` is 1-based, 0 when unknown.
struct ParseError : std::runtime_error {
    ParseError(const std::string &what, size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {
    }
    size_t line;
};

/// A broken internal invariant. Always a bug, never an input problem.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cliffc

#endif
