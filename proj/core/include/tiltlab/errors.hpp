#pragma once

#include <stdexcept>
#include <string>

namespace tiltlab {

// Malformed or inconsistent caller input (size mismatch, unknown vertex, bad file).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input that violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Input outside the supported class (e.g. root enumeration for a non-Dynkin quiver).
class UnsupportedError : public std::invalid_argument {
public:
    explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal mathematical invariant failed. Indicates a bug or an incomplete capped catalog.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] void throw_invariant(const std::string& what);

}  // namespace tiltlab
