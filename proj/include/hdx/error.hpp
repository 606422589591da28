#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hdx {

enum class ErrorKind {
    EmptyInput,
    NotPure,
    FaceNotInComplex,
    ComplexMismatch,
    BadDimension,
    UnknownVertex,
    TooLarge,
    BadEta,
    PreconditionUnverified,
    HypothesisFailed,
    NoValidTyping,
    NotBiregular,
    BadParam,
    NotPrime,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::FaceNotInComplex: return "FaceNotInComplex";
        case ErrorKind::ComplexMismatch: return "ComplexMismatch";
        case ErrorKind::BadDimension: return "BadDimension";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::BadEta: return "BadEta";
        case ErrorKind::PreconditionUnverified: return "PreconditionUnverified";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::NoValidTyping: return "NoValidTyping";
        case ErrorKind::NotBiregular: return "NotBiregular";
        case ErrorKind::BadParam: return "BadParam";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace hdx
