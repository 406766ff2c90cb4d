#pragma once

#include <stdexcept>
#include <string>

namespace kpa {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Square bijection or cube condition failure; the message names the edges.
class FactorizationError : public Error {
public:
    using Error::Error;
};

class ComposabilityError : public Error {
public:
    using Error::Error;
};

class DegreeError : public Error {
public:
    using Error::Error;
};

class EndpointError : public Error {
public:
    using Error::Error;
};

class SizeLimitError : public Error {
public:
    using Error::Error;
};

class NotSaturatedHereditaryError : public Error {
public:
    using Error::Error;
};

class NoCycleError : public Error {
public:
    using Error::Error;
};

class NoEntranceError : public Error {
public:
    using Error::Error;
};

class NotASinkError : public Error {
public:
    using Error::Error;
};

class NotAcyclicError : public Error {
public:
    using Error::Error;
};

class RingMismatchError : public Error {
public:
    using Error::Error;
};

class PairError : public Error {
public:
    using Error::Error;
};

class ClosureDivergedError : public Error {
public:
    using Error::Error;
};

}  // namespace kpa
