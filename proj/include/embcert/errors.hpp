#pragma once

#include <stdexcept>
#include <string>

namespace embcert {

/// Malformed user input (facet files, generator specs).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its contract.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// An exact search would exceed its configured budget. Carries the cap that
/// was hit; never downgraded to an approximation by the library itself.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, long long cap)
        : std::runtime_error(what), cap_(cap) {}
    long long cap() const noexcept { return cap_; }

private:
    long long cap_;
};

/// Integer arithmetic would wrap around (Smith normal form pivoting).
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// Internal consistency failure. Indicates a bug, never valid input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace embcert
