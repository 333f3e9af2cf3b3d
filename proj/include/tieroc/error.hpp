#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tieroc {

// Base for every data/argument failure raised by the library. code() is a
// stable machine-readable token (e.g. "DEGENERATE_CLASS") surfaced by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string_view code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class IngestError : public Error {
public:
    explicit IngestError(const std::string& message) : Error("INGEST", message) {}
};

class DegenerateClassError : public Error {
public:
    explicit DegenerateClassError(const std::string& message)
        : Error("DEGENERATE_CLASS", message) {}
};

class NotBinaryError : public Error {
public:
    explicit NotBinaryError(const std::string& message) : Error("NOT_BINARY", message) {}
};

class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& message)
        : Error("INSUFFICIENT_DATA", message) {}
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& message) : Error("ARGUMENT", message) {}
};

}  // namespace tieroc
