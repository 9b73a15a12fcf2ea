#pragma once

#include <stdexcept>
#include <string>

namespace cardinal {

// Error taxonomy used across the library:
//   DomainError     - mathematically out-of-domain input (pole, negative x, bad prime)
//   DivergenceError - a series evaluation was requested outside its convergence region;
//                     the message names the violated inequality
//   UsageError      - malformed request (unknown kind/method/family, bad flag value)
//   ResourceError   - a computation was refused because it would not finish at desk scale

class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class DivergenceError : public DomainError {
public:
    explicit DivergenceError(const std::string& what) : DomainError(what) {}
};

class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cardinal
