#pragma once

#include <stdexcept>
#include <string>

namespace latwidth {

// Base class for every error raised by the library. Callers that only care
// about "something was wrong with the input" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroVector : public Error {
public:
    ZeroVector() : Error("zero vector has no lattice direction") {}
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("empty point set") {}
};

class NotUnimodular : public Error {
public:
    explicit NotUnimodular(const std::string& what) : Error(what) {}
};

class NotAVertex : public Error {
public:
    explicit NotAVertex(const std::string& what) : Error(what) {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

class ParamOutOfRange : public Error {
public:
    explicit ParamOutOfRange(const std::string& what) : Error(what) {}
};

class ArithmeticOverflow : public Error {
public:
    ArithmeticOverflow() : Error("64-bit integer overflow") {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

class OverflowGuard : public Error {
public:
    explicit OverflowGuard(const std::string& what) : Error(what) {}
};

}  // namespace latwidth
