#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posyring {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands belong to rings with different numbers of variables.
class arity_mismatch : public error {
public:
    explicit arity_mismatch(const std::string& what) : error(what) {}
};

/// A value violates a ring-level precondition (zero divisor, unit expected, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

/// Expression text rejected by the grammar; `position` is a 0-based byte offset.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what), position(position) {}
    std::size_t position;
};

}  // namespace posyring
