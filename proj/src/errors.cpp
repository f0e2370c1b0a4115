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

#include "skewmrd/errors.hpp"

namespace skewmrd {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::NotInTower: return "NotInTower";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::ZeroOperand: return "ZeroOperand";
        case ErrorKind::NotCoprimeWithT: return "NotCoprimeWithT";
        case ErrorKind::DeltaUnsupported: return "DeltaUnsupported";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::NotInE: return "NotInE";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorKind::SNotOne: return "SNotOne";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InfiniteField: return "InfiniteField";
        case ErrorKind::EmptyCode: return "EmptyCode";
        case ErrorKind::Unknown: return "Unknown";
        case ErrorKind::Parse: return "Parse";
    }
    return "Error";
}

}  // namespace skewmrd
