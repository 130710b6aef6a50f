#pragma once

#include <stdexcept>
#include <string>

namespace syncfifo {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid FifoConfig / SimConfig / SequenceSpec.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Caller broke a precondition (e.g. data wider than the FIFO).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Unknown test name. The message lists the registered names.
class LookupError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Raised by the VCD writer for bad declarations or time regressions.
class VcdError : public Error {
public:
    using Error::Error;
};

class VcdParseError : public Error {
public:
    VcdParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace syncfifo
