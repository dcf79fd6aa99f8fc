#pragma once

#include <stdexcept>
#include <string>

namespace riocalc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// coefficient ring
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct InexactDivision : Error {
    InexactDivision() : Error("inexact division") {}
};

// series
struct NonUnitConstantTerm : Error {
    NonUnitConstantTerm() : Error("constant term is not a unit") {}
};
struct NonzeroConstantInner : Error {
    NonzeroConstantInner() : Error("inner series has nonzero constant term") {}
};
struct NotRevertible : Error {
    NotRevertible() : Error("series is not revertible (need f(0)=0, f'(0) a unit)") {}
};
struct BadConstantTerm : Error {
    BadConstantTerm() : Error("constant term must be 1") {}
};
struct NonzeroLowOrderTerm : Error {
    NonzeroLowOrderTerm() : Error("low-order coefficients are not exactly zero") {}
};
struct TruncationExceeded : Error {
    TruncationExceeded() : Error("index exceeds truncation order") {}
};

// matrices and pairs
struct InvalidPair : Error {
    explicit InvalidPair(const std::string& what) : Error("invalid Riordan pair: " + what) {}
};
struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix has a non-unit diagonal entry") {}
};

// continued fractions
struct ZeroBeta : Error {
    ZeroBeta() : Error("zero beta coefficient in continued fraction") {}
};
struct HankelDegenerate : Error {
    int level;
    explicit HankelDegenerate(int lvl)
        : Error("Hankel-degenerate moment sequence (beta vanishes at level " +
                std::to_string(lvl) + ")"),
          level(lvl) {}
};

// transforms
struct NotEnoughTerms : Error {
    NotEnoughTerms() : Error("not enough sequence terms") {}
};
struct UnsupportedCoefficient : Error {
    explicit UnsupportedCoefficient(const std::string& what)
        : Error("unsupported coefficient type: " + what) {}
};

// families
struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& what)
        : Error("degenerate parameters: " + what) {}
};

// fixtures / CLI
struct FixtureMissing : Error {
    explicit FixtureMissing(const std::string& what) : Error("fixture missing: " + what) {}
};
struct ParseError : Error {
    int line;
    ParseError(const std::string& what, int line_no)
        : Error("parse error at line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

}  // namespace riocalc
