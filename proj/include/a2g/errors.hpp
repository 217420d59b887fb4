#pragma once

#include <stdexcept>

namespace a2g {

// Malformed or inconsistent configuration input. Mapped to CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was evaluated outside its physical domain. CLI exit code 3.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace a2g
