#ifndef HOMAREA_ERRORS_HPP
#define HOMAREA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homarea {

// All library failures derive from Error. Input problems (bad geometry, bad
// files) derive from InputError so callers can map them to one exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

/// General-position violation: overlaps, tangencies, vertex on the other curve.
class DegenerateInput : public InputError {
public:
    explicit DegenerateInput(const std::string &reason)
        : InputError("degenerate input: " + reason) {}
};

class NotSimple : public InputError {
public:
    explicit NotSimple(const std::string &which)
        : InputError(which + " is not simple") {}
};

class EndpointMismatch : public InputError {
public:
    EndpointMismatch() : InputError("paths do not share both endpoints") {}
};

class ParseError : public InputError {
public:
    ParseError(int line, int column, const std::string &what)
        : InputError("parse error at " + std::to_string(line) + ":" +
                     std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class SphereAreaTooSmall : public InputError {
public:
    explicit SphereAreaTooSmall(const std::string &detail)
        : InputError("sphere area too small: " + detail) {}
};

class OnBoundary : public Error {
public:
    OnBoundary() : Error("point lies on the arrangement's 1-skeleton") {}
};

class OnCurve : public Error {
public:
    OnCurve() : Error("point lies on the curve") {}
};

/// No valid anchor chain reaches the final endpoint; indicates a bug.
class NoValidChain : public Error {
public:
    NoValidChain() : Error("no valid anchor chain reaches the final endpoint") {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string &what)
        : Error("internal error: " + what) {}
};

} // namespace homarea

#endif
