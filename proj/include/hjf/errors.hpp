#pragma once

#include <stdexcept>
#include <string>

namespace hjf {

/// A requested check needs more Fourier coefficients than the input stores.
class InsufficientTruncation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural invariant of a form was found violated; what() names a witness.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ClassLawViolation : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

class InsufficientCuspFormTruncation : public InsufficientTruncation {
public:
    InsufficientCuspFormTruncation(const std::string& what, long long required)
        : InsufficientTruncation(what), required_(required) {}
    long long required() const noexcept { return required_; }

private:
    long long required_;
};

} // namespace hjf
