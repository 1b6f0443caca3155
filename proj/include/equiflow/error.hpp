#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equiflow {

enum class ErrorKind {
    MalformedTable,
    NoIdentity,
    NoInverse,
    NotAssociative,
    GroupTooLarge,
    EmptyComplex,
    DuplicateVertexInSimplex,
    NotSimplicial,
    NotHomomorphism,
    RegularizationFailed,
    SimplexNotInComplex,
    UnknownCatalogName,
    IrregularAction,
    UnknownIsotropy,
    NotInvariant,
    EmptyFixedSet,
    ParseError,
    SchemaError,
};

std::string_view to_string(ErrorKind kind);

/// Every domain failure is reported through this one exception type; `kind()`
/// carries the machine-readable category used in CLI error reports.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    /// Message without the kind prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

}  // namespace equiflow
