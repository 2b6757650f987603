#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace assoc {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ASSOC_SIMPLE_ERROR(Name)                                  \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

ASSOC_SIMPLE_ERROR(DivisionByZero);
ASSOC_SIMPLE_ERROR(NotAUnit);
ASSOC_SIMPLE_ERROR(ConductorMismatch);
ASSOC_SIMPLE_ERROR(ConductorTooLarge);
ASSOC_SIMPLE_ERROR(Singular);
ASSOC_SIMPLE_ERROR(DimensionMismatch);
ASSOC_SIMPLE_ERROR(PreconditionError);
ASSOC_SIMPLE_ERROR(BadEigenbasis);
ASSOC_SIMPLE_ERROR(NotPermutation);
ASSOC_SIMPLE_ERROR(NotAFusion);
ASSOC_SIMPLE_ERROR(UnsupportedFamily);
ASSOC_SIMPLE_ERROR(InternalAssertion);
ASSOC_SIMPLE_ERROR(NotEigen);
ASSOC_SIMPLE_ERROR(ZeroVector);
ASSOC_SIMPLE_ERROR(OrbitClosureViolation);
ASSOC_SIMPLE_ERROR(TooLarge);
ASSOC_SIMPLE_ERROR(IncompatibleT);
ASSOC_SIMPLE_ERROR(IrrationalData);
ASSOC_SIMPLE_ERROR(ValidationError);
ASSOC_SIMPLE_ERROR(BadGroupTable);
ASSOC_SIMPLE_ERROR(BadCharacterTable);

#undef ASSOC_SIMPLE_ERROR

/// First violated scheme axiom together with a witness triple. The witness
/// meaning depends on the axiom: (x, y, -1) for (i)/(ii), (a, b, k) or
/// (i, j, k) for (iii)/(iv).
class NotAScheme : public Error {
public:
    NotAScheme(std::string axiom, std::array<int, 3> witness, const std::string& detail);

    const std::string& axiom() const noexcept { return axiom_; }
    const std::array<int, 3>& witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::array<int, 3> witness_;
};

class KreinViolation : public Error {
public:
    KreinViolation(int i, int j, int k, const std::string& detail);
    std::array<int, 3> index() const noexcept { return index_; }

private:
    std::array<int, 3> index_;
};

/// Property M_K fails: the merged eigenmatrix has more distinct rows than
/// there are Galois orbits.
class NotClosed : public Error {
public:
    NotClosed(int distinct_rows, int orbits);
    int distinct_rows() const noexcept { return distinct_rows_; }
    int orbits() const noexcept { return orbits_; }

private:
    int distinct_rows_;
    int orbits_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason);
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace assoc
