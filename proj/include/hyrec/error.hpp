/*
   Copyright 2026 The hyrec Authors

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

#ifndef HYREC_ERROR_HPP
#define HYREC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyrec {

enum class ErrorCode {
    NotPrime,
    BadCharacteristic,
    NonInvertible,
    ExtensionTooLarge,
    ReducibleModulus,
    ZeroDivisor,
    Undefined,
    UnsupportedDegree,
    EvenDegree,
    NotSquarefree,
    NotMonic,
    NotOnJacobian,
    NotReduced,
    CurveMismatch,
    FieldMismatch,
    CapExceeded,
    NotARoot,
    NonTerminating,
    ZeroDiscriminant,
    EmptyRange,
    SyntaxError,
    VerificationFailed,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::BadCharacteristic: return "BadCharacteristic";
        case ErrorCode::NonInvertible: return "NonInvertible";
        case ErrorCode::ExtensionTooLarge: return "ExtensionTooLarge";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::ZeroDivisor: return "ZeroDivisor";
        case ErrorCode::Undefined: return "Undefined";
        case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorCode::EvenDegree: return "EvenDegree";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotOnJacobian: return "NotOnJacobian";
        case ErrorCode::NotReduced: return "NotReduced";
        case ErrorCode::CurveMismatch: return "CurveMismatch";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotARoot: return "NotARoot";
        case ErrorCode::NonTerminating: return "NonTerminating";
        case ErrorCode::ZeroDiscriminant: return "ZeroDiscriminant";
        case ErrorCode::EmptyRange: return "EmptyRange";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the polynomial text parser; `position` is a 0-based offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace hyrec

#endif  // HYREC_ERROR_HPP
