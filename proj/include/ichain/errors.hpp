#ifndef ICHAIN_ERRORS_HPP
#define ICHAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ichain {

/// Input outside the domain where a quantity is defined (table lookups,
/// sites outside the volume, vacuous bounds).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Caller broke an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Request refused because it would exceed a resource guard.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (profile specs, lists, config files).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ichain

#endif  // ICHAIN_ERRORS_HPP
