#pragma once

#include <stdexcept>
#include <string>

namespace cyclelift {

// Base of every checked failure raised by the library. The CLI maps the
// subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inputs that violate a documented precondition (split prime in D_B, odd
// delta, zero argument, malformed text...).
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

class PrecisionExhausted : public Error {
public:
    PrecisionExhausted(const std::string& what, int needed)
        : Error(what + " (needs precision >= " + std::to_string(needed) + ")"),
          needed_(needed) {}
    int needed() const noexcept { return needed_; }

private:
    int needed_;
};

class DegenerateVector : public Error {
public:
    using Error::Error;
};

class HyperbolicBasisFailure : public Error {
public:
    using Error::Error;
};

class SearchRadiusExceeded : public Error {
public:
    using Error::Error;
};

class SearchBoundExhausted : public Error {
public:
    using Error::Error;
};

class EmptyIntersection : public Error {
public:
    using Error::Error;
};

class NotAdjacent : public Error {
public:
    using Error::Error;
};

class TruncationInsufficient : public Error {
public:
    using Error::Error;
};

}  // namespace cyclelift
