#pragma once

#include <stdexcept>
#include <string>

namespace relaynet {

/// Invalid argument or shape mismatch in a library call.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed network document. The message names the offending location.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace relaynet
