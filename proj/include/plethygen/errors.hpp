#pragma once

#include <stdexcept>
#include <string>

namespace plethygen {

// Bad arguments from a caller or the command line (CLI exit code 2).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// A configured work bound would be exceeded (CLI exit code 3).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity that must hold failed to verify.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed (a bug, not a user error).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace plethygen
