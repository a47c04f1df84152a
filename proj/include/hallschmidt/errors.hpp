// Exception taxonomy for the library.  Every failure carries enough context
// to reproduce it (violating triple, offending element, file position, ...).
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multiplication table fails a group axiom.  `witness` holds the first
// violating triple for associativity failures, or (-1,-1,-1) otherwise.
struct NotAGroup : Error {
    std::array<std::int32_t, 3> witness;
    NotAGroup(const std::string& msg, std::array<std::int32_t, 3> w = {-1, -1, -1})
        : Error("not a group: " + msg), witness(w) {}
};

struct NotAPermutation : Error {
    explicit NotAPermutation(const std::string& msg)
        : Error("not a permutation: " + msg) {}
};

struct SingularGenerator : Error {
    explicit SingularGenerator(const std::string& msg)
        : Error("singular generator: " + msg) {}
};

struct OrderCapExceeded : Error {
    explicit OrderCapExceeded(const std::string& msg)
        : Error("element cap exceeded: " + msg) {}
};

struct LatticeCapExceeded : Error {
    explicit LatticeCapExceeded(const std::string& msg)
        : Error("lattice cap exceeded: " + msg) {}
};

// Requested quotient by a non-normal subgroup; `conjugator` and `member`
// witness g*h*g^-1 escaping the subgroup.
struct NotNormal : Error {
    std::int32_t conjugator, member;
    NotNormal(const std::string& msg, std::int32_t g, std::int32_t h)
        : Error("not normal: " + msg), conjugator(g), member(h) {}
};

struct InvalidAction : Error {
    explicit InvalidAction(const std::string& msg)
        : Error("invalid action: " + msg) {}
};

struct NotSchmidt : Error {
    explicit NotSchmidt(const std::string& msg)
        : Error("not a Schmidt group: " + msg) {}
};

struct HypothesisNotMet : Error {
    explicit HypothesisNotMet(const std::string& msg)
        : Error("hypothesis not met: " + msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error("not prime: " + msg) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& msg)
        : Error("invalid parameters: " + msg) {}
};

struct ParseError : Error {
    int line, column;
    ParseError(int ln, int col, const std::string& msg)
        : Error("parse error at line " + std::to_string(ln) + ", column " +
                std::to_string(col) + ": " + msg),
          line(ln), column(col) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error("io error: " + msg) {}
};

struct PrimitivePolynomialNotFound : Error {
    explicit PrimitivePolynomialNotFound(const std::string& msg)
        : Error("primitive polynomial not found: " + msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg)
        : Error("config error: " + msg) {}
};

}  // namespace hs
