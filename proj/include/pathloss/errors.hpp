#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathloss {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input does not match the documented file schema (missing column, bad header).
class SchemaError : public Error {
public:
    using Error::Error;
};

// A record references a device that has no link profile.
class JoinError : public Error {
public:
    JoinError(const std::string& msg, std::string device)
        : Error(msg), device_id(std::move(device)) {}
    std::string device_id;
};

// Invalid or degenerate data for the requested computation.
class DataError : public Error {
public:
    using Error::Error;
};

// Argument outside a special function's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Design matrix is rank deficient; names the columns that appear dependent.
class RankError : public Error {
public:
    RankError(const std::string& msg, std::vector<std::string> columns)
        : Error(msg), dependent_columns(std::move(columns)) {}
    std::vector<std::string> dependent_columns;
};

}  // namespace pathloss
