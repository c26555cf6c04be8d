#pragma once

#include <stdexcept>
#include <string>

namespace vdemask {

// Precondition or unit-algebra violation in the numeric substrate.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A protection criterion that cannot be met: the required carrier-to-interference
// ratio exceeds what the link closes with no interference at all. Carries the
// shortfall so callers can report how far off the scenario is.
class InfeasibleBudget : public std::runtime_error {
public:
    InfeasibleBudget(const std::string& what, double shortfall_db)
        : std::runtime_error(what), shortfall_db_(shortfall_db) {}

    double shortfall_db() const { return shortfall_db_; }

private:
    double shortfall_db_;
};

// Configuration file problems, each failure mode distinguishable by type.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigFileError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class ConfigSyntaxError : public ConfigError {
public:
    ConfigSyntaxError(const std::string& what, int line)
        : ConfigError(what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class ConfigUnknownKey : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class ConfigValueError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

}  // namespace vdemask
