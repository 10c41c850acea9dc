#pragma once

#include <stdexcept>
#include <string>

namespace fracdecomp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Enumeration or LP would exceed a configured size limit.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// A construction step could not be carried out. `stage` names the construction.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& what)
        : Error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace fracdecomp
