#pragma once

#include <stdexcept>
#include <string>

namespace betajack {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct ContextMismatch : Error {
    ContextMismatch() : Error("values belong to different parameter contexts") {}
};

struct UnknownParameter : Error {
    explicit UnknownParameter(const std::string& name)
        : Error("unknown parameter: " + name) {}
};

// Rational function grows at infinity; carries the degree excess num-deg - den-deg.
struct UnboundedAtInfinity : Error {
    long excess;
    explicit UnboundedAtInfinity(long excess_)
        : Error("rational function unbounded at infinity, degree excess " +
                std::to_string(excess_)),
          excess(excess_) {}
};

struct CellOutOfDiagram : Error {
    CellOutOfDiagram(int i, int j)
        : Error("cell (" + std::to_string(i) + "," + std::to_string(j) +
                ") outside partition diagram") {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what) : Error(what) {}
};

struct LengthExceedsN : Error {
    LengthExceedsN(int len, int n)
        : Error("partition length " + std::to_string(len) + " exceeds n = " +
                std::to_string(n)) {}
};

struct SingularAlpha : Error {
    explicit SingularAlpha(const std::string& what) : Error(what) {}
};

struct PoleAtParameters : Error {
    explicit PoleAtParameters(const std::string& what) : Error(what) {}
};

struct ZeroSamplePoint : Error {
    ZeroSamplePoint() : Error("sample point has a zero coordinate") {}
};

struct ZeroDenominatorParam : Error {
    explicit ZeroDenominatorParam(const std::string& what) : Error(what) {}
};

struct GuardExceeded : Error {
    explicit GuardExceeded(const std::string& what) : Error(what) {}
};

struct NotEigenvector : Error {
    explicit NotEigenvector(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace betajack
