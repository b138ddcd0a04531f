#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratespread {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (non-finite values, length mismatches,
/// unknown sector codes, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Too few observations for the requested computation.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// A series (or factor) has zero variance where a correlation or a
/// division by a volatility is required.
class DegenerateSeries : public Error {
public:
    using Error::Error;
};

/// A configuration object failed validation (e.g. non-PSD target
/// correlation for the market generator).
class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// File-format error carrying the file path and 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::string path, std::size_t line, const std::string& detail)
        : Error(path + ":" + std::to_string(line) + ": " + detail),
          path_(std::move(path)),
          line_(line) {}

    const std::string& path() const { return path_; }
    std::size_t line() const { return line_; }

private:
    std::string path_;
    std::size_t line_;
};

} // namespace ratespread
