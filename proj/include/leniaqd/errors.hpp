// Copyright 2026 The leniaqd Authors.
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

#ifndef LENIAQD_ERRORS_HPP
#define LENIAQD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leniaqd {

// Exceptions are reserved for faults: malformed inputs, broken invariants,
// numerical blowups. Expected outcomes of healthy control flow (a discarded
// rollout, a rejected archive candidate) are ordinary return values instead.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Configuration or input data violates a documented constraint.
struct ValidationError : Error {
    using Error::Error;
};

/// A file could not be parsed (syntax, missing field, wrong type).
struct ParseError : Error {
    using Error::Error;
};

/// An I/O level failure: missing file, short read, checksum mismatch.
struct IoError : Error {
    using Error::Error;
};

/// A numerical routine produced a non-finite or otherwise unusable value.
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace leniaqd

#endif  // LENIAQD_ERRORS_HPP
