/*
   Copyright 2026 The skewmrd Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEWMRD_ERRORS_HPP
#define SKEWMRD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewmrd {

enum class ErrorKind {
    DivisionByZero,
    ContextMismatch,
    NotInTower,
    NotIrreducible,
    BothZero,
    ZeroOperand,
    NotCoprimeWithT,
    DeltaUnsupported,
    PreconditionFailed,
    NotInE,
    LengthMismatch,
    DegreeTooHigh,
    DegreeOutOfRange,
    SNotOne,
    ShapeMismatch,
    BudgetExceeded,
    InfiniteField,
    EmptyCode,
    Unknown,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// that frontends can map it onto exit codes without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace skewmrd

#endif
