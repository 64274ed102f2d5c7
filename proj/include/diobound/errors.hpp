#ifndef DIOBOUND_ERRORS_HPP
#define DIOBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diobound {

// Violated precondition or invariant (dimension mismatch, bad indices, ...).
class contract_violation : public std::logic_error {
public:
    explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

// A configured resource cap was hit before the operation could finish.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Operation asked for a dimension it has no mathematical backing for.
class unsupported_dimension : public contract_violation {
public:
    explicit unsupported_dimension(const std::string& what) : contract_violation(what) {}
};

// Malformed textual input (equations, tuples, system files).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

// Checkpoint file does not belong to the requested configuration.
class checkpoint_mismatch : public std::runtime_error {
public:
    explicit checkpoint_mismatch(const std::string& what) : std::runtime_error(what) {}
};

} // namespace diobound

#endif
