#pragma once

#include <stdexcept>
#include <string>

namespace dwellsim {

// Base class for all library errors. Subclasses carry no extra state; the
// type itself is the classification.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& what) : Error(what) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error(what) {}
};

struct EchoMismatch : Error {
    explicit EchoMismatch(const std::string& what) : Error(what) {}
};

struct BackendError : Error {
    explicit BackendError(const std::string& what) : Error(what) {}
};

struct DivisionDomain : Error {
    explicit DivisionDomain(const std::string& what) : Error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct OrderViolation : Error {
    explicit OrderViolation(const std::string& what) : Error(what) {}
};

struct InvalidState : Error {
    explicit InvalidState(const std::string& what) : Error(what) {}
};

struct EmptyTrainingSet : Error {
    explicit EmptyTrainingSet(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

struct UnknownContainer : Error {
    explicit UnknownContainer(const std::string& what) : Error(what) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

struct YardFull : Error {
    explicit YardFull(const std::string& what) : Error(what) {}
};

struct InvariantBreach : Error {
    explicit InvariantBreach(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace dwellsim
