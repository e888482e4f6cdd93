#ifndef LOGMONOID_ERROR_HPP
#define LOGMONOID_ERROR_HPP

#include <stdexcept>
#include <string>

namespace logmonoid {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const { return 1; }
    virtual const char* kind() const { return "error"; }
};

// Malformed input or a violated precondition.
class InputError : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "input"; }
};

class IoError : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "io"; }
};

// A precondition failed on a specific element, reported as `witness`.
class PreconditionError : public InputError {
public:
    PreconditionError(const std::string& what, std::string witness = "")
        : InputError(witness.empty() ? what : what + " (witness " + witness + ")"), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }
    const char* kind() const override { return "precondition"; }

private:
    std::string witness_;
};

class BoundExceeded : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 2; }
    const char* kind() const override { return "bound"; }
};

class VerificationFailure : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
    const char* kind() const override { return "verification"; }
};

}  // namespace logmonoid

#endif
