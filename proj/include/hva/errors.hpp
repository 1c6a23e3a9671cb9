#pragma once

#include <stdexcept>
#include <string>

namespace hva {

/// Operands whose dimensions do not agree (vector/matrix products, guards, ...).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Inversion of a matrix with zero determinant.
struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input symbol that is not in the machine alphabet.
struct UnknownSymbolError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A construction was applied to operands violating its preconditions.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed document or text form. `where` is a byte offset or a JSON pointer.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string where)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

} // namespace hva
