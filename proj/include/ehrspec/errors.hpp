#pragma once

#include <stdexcept>
#include <string>

namespace ehrspec {

// Every error raised by the library derives from Error. The three families
// map onto distinct CLI exit codes (validation 1, overflow 2, inconsistency 3).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class DegenerateSimplex : public ValidationError {
public:
    explicit DegenerateSimplex(const std::string &what)
        : ValidationError("DegenerateSimplex: " + what) {}
};

class OriginNotInterior : public ValidationError {
public:
    explicit OriginNotInterior(const std::string &what)
        : ValidationError("OriginNotInterior: " + what) {}
};

class NotReduced : public ValidationError {
public:
    explicit NotReduced(const std::string &what)
        : ValidationError("NotReduced: " + what) {}
};

class ExponentOutOfRange : public ValidationError {
public:
    explicit ExponentOutOfRange(const std::string &what)
        : ValidationError("ExponentOutOfRange: " + what) {}
};

class InvalidPolytope : public ValidationError {
public:
    explicit InvalidPolytope(const std::string &what)
        : ValidationError("InvalidPolytope: " + what) {}
};

class InvalidInput : public ValidationError {
public:
    explicit InvalidInput(const std::string &what)
        : ValidationError("InvalidInput: " + what) {}
};

class EnumerationTooLarge : public Error {
public:
    explicit EnumerationTooLarge(const std::string &what)
        : Error("EnumerationTooLarge: " + what) {}
};

class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string &what)
        : Error("InternalInconsistency: " + what) {}
};

} // namespace ehrspec
