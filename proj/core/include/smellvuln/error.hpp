#pragma once

#include <stdexcept>
#include <string>

namespace smellvuln {

/// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad configuration or input data. The CLI maps this to exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

/// A corpus or facts file that violates the model invariants
/// (duplicate qualified names, dangling relations, schema violations).
class ModelError : public InputError {
public:
    using InputError::InputError;
};

/// A statistical test that is undefined for the given table.
class StatsError : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure. The CLI maps this to exit code 2.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace smellvuln
