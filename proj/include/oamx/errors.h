// Copyright 2026 The oamx Authors
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


#ifndef OAMX_ERRORS_H
#define OAMX_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oamx {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Normalization requested for a state whose amplitudes are all (numerically) zero.
struct ZeroStateError : Error {
    ZeroStateError() : Error("cannot normalize a zero state") {
    }
};

/// A strict-mode beam-splitter received an OAM value that is not a multiple of its order.
struct NonMultipleModeError : Error {
    NonMultipleModeError(int64_t oam, int64_t order)
        : Error("OAM value " + std::to_string(oam) + " is not a multiple of beam-splitter order " +
                std::to_string(order)),
          oam(oam),
          order(order) {
    }
    int64_t oam;
    int64_t order;
};

struct InvalidDimensionError : Error {
    explicit InvalidDimensionError(int64_t d)
        : Error("invalid dimension " + std::to_string(d) + " (need d >= 2)"), dimension(d) {
    }
    int64_t dimension;
};

struct NotSimplifiableError : Error {
    using Error::Error;
};

struct HopBudgetExceededError : Error {
    explicit HopBudgetExceededError(size_t budget)
        : Error("packet exceeded hop budget of " + std::to_string(budget) + " (wiring loop?)"),
          budget(budget) {
    }
    size_t budget;
};

/// Norm of a propagated state left the tolerance band. Always an implementation bug.
struct NormDriftError : Error {
    NormDriftError(double expected, double actual)
        : Error("norm drifted from " + std::to_string(expected) + " to " + std::to_string(actual)),
          expected(expected),
          actual(actual) {
    }
    double expected;
    double actual;
};

struct ParseError : Error {
    ParseError(size_t line, size_t column, const std::string &reason)
        : Error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": " + reason),
          line(line),
          column(column),
          reason(reason) {
    }
    size_t line;
    size_t column;
    std::string reason;
};

struct SchemaVersionMismatchError : Error {
    SchemaVersionMismatchError(const std::string &expected, const std::string &found)
        : Error("schema version mismatch: expected '" + expected + "', found '" + found + "'"),
          expected(expected),
          found(found) {
    }
    std::string expected;
    std::string found;
};

}  // namespace oamx

#endif
