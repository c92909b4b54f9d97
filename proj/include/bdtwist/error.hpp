#pragma once

#include <stdexcept>
#include <string>

namespace bdtwist {

// Base for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero scalar") {}
};

struct PoleAtOne : Error {
    PoleAtOne() : Error("denominator vanishes at v = 1") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch(int a, int b)
        : Error("matrix dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular over Q(v)") {}
};

struct NotNilpotent : Error {
    NotNilpotent() : Error("matrix is not nilpotent") {}
};

struct UnsupportedAlgebra : Error {
    explicit UnsupportedAlgebra(const std::string& what) : Error("unsupported algebra: " + what) {}
};

struct NotComposite : Error {
    NotComposite() : Error("root is simple, no minimal interval") {}
};

struct NotIsometry : Error {
    int i, j;
    NotIsometry(int i_, int j_)
        : Error("tau is not an isometry at pair (" + std::to_string(i_) + "," + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

struct HasCycle : Error {
    int alpha, k;
    HasCycle(int alpha_, int k_)
        : Error("tau^" + std::to_string(k_) + "(" + std::to_string(alpha_) + ") = " +
                std::to_string(alpha_) + ", cycle"),
          alpha(alpha_), k(k_) {}
};

struct Inconsistent : Error {
    Inconsistent() : Error("exponent system has no solution; not a Belavin-Drinfeld triple") {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error("out of range: " + what) {}
};

struct BoundExceeded : Error {
    BoundExceeded(int n, int bound)
        : Error("n = " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(bound)) {}
};

struct ExponentNotIntegral : Error {
    explicit ExponentNotIntegral(const std::string& e)
        : Error("q-exponent " + e + " is not an integral power of v for the session denominator") {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& what) : Error("no solution: " + what) {}
};

struct InstanceRelationFailed : Error {
    explicit InstanceRelationFailed(const std::string& what)
        : Error("test instance violates its defining relations: " + what) {}
};

struct NotIdentityAtZero : Error {
    NotIdentityAtZero() : Error("zeroth-order term of R at q = 1 is not the identity") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace bdtwist
