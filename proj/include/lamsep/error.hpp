#pragma once

#include <stdexcept>
#include <string>

namespace lamsep {

enum class ErrorKind {
    OutOfRange,
    SelfLoop,
    DuplicateEdge,
    NotConnectedGraph,
    TooLarge,
    ContextMismatch,
    BadIndexSet,
    NotACutset,
    NotLaminar,
    CrossingPair,
    NotTwoSided,
    BadParams,
    InvalidSeparation,
    InvalidDecomposition,
    NotDeciduous,
    ParseError,
    InternalInvariant,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception. InternalInvariant errors additionally carry a
/// machine-readable certificate (JSON text) describing the failing instance.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    Error(ErrorKind kind, const std::string& message, std::string certificate)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          certificate_(std::move(certificate)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& certificate() const { return certificate_; }

private:
    ErrorKind kind_;
    std::string certificate_;
};

} // namespace lamsep
