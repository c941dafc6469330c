#pragma once

#include <stdexcept>
#include <string>

namespace schro {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderTooLarge : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };
struct OutOfExtension : Error { using Error::Error; };
struct ToleranceNotReached : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace schro
