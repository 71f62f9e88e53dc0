#pragma once

#include <stdexcept>
#include <string>

namespace milag {

// Exact division was requested but the divisor does not divide the
// dividend; `remainder` holds a printable form of what was left over.
class DivisionError : public std::runtime_error {
public:
    DivisionError(const std::string& what, std::string remainder)
        : std::runtime_error(what + " (remainder: " + remainder + ")"),
          remainder_(std::move(remainder)) {}
    const std::string& remainder() const { return remainder_; }

private:
    std::string remainder_;
};

class ZeroPolynomial : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegreeTooLow : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DependentSeeds : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexMissing : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedCase : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotSquareIntegrable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NoPrepotential : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace milag
