#ifndef POLYHARM_ERRORS_HPP
#define POLYHARM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyharm {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a result would exceed the configured term-count cap.
// Converts expression blow-up under iterated operators into a
// diagnosable failure instead of an unbounded computation.
class ExpressionTooLarge : public Error {
public:
    ExpressionTooLarge(std::size_t count, std::size_t cap, const std::string& context = {})
        : Error("expression exceeds term cap (" + std::to_string(count) + " > " +
                std::to_string(cap) + (context.empty() ? "" : ", " + context) + ")"),
          count_(count), cap_(cap) {}

    std::size_t count() const { return count_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t count_;
    std::size_t cap_;
};

// Input expression depends on t where a t-independent function is required.
class DependsOnT : public Error {
public:
    DependsOnT() : Error("expression depends on t") {}
};

// The image of a basis element under the operator has a component
// outside the span of the basis.
class EscapesBasis : public Error {
public:
    explicit EscapesBasis(const std::string& detail)
        : Error("operator image escapes the basis span: " + detail) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& detail)
        : Error("matrix dimension mismatch: " + detail) {}
};

// An evaluation point violates the geometry's domain constraints.
class InvalidPoint : public Error {
public:
    explicit InvalidPoint(const std::string& detail)
        : Error("invalid evaluation point: " + detail) {}
};

// Family constructor errors -------------------------------------------------

class FamilyError : public Error {
public:
    explicit FamilyError(const std::string& msg) : Error(msg) {}
};

class ZeroFamily : public FamilyError {
public:
    explicit ZeroFamily(const std::string& detail = "all parameters are zero")
        : FamilyError("zero family: " + detail) {}
};

class NotHarmonic : public FamilyError {
public:
    explicit NotHarmonic(const std::string& detail)
        : FamilyError("factor is not harmonic: " + detail) {}
};

// A required derivative of the harmonic factor vanishes identically;
// reports the failing order and axis.
class DerivativeVanishes : public FamilyError {
public:
    DerivativeVanishes(unsigned order, char axis)
        : FamilyError(std::string("derivative d^") + std::to_string(order) + "/d" + axis +
                      "^" + std::to_string(order) + " vanishes identically"),
          order_(order), axis_(axis) {}

    unsigned order() const { return order_; }
    char axis() const { return axis_; }

private:
    unsigned order_;
    char axis_;
};

class DegreeConditionViolated : public FamilyError {
public:
    explicit DegreeConditionViolated(const std::string& detail)
        : FamilyError("degree condition violated: " + detail) {}
};

class NoProperSolution : public FamilyError {
public:
    explicit NoProperSolution(const std::string& detail)
        : FamilyError("no proper solution in the ansatz nullspace: " + detail) {}
};

} // namespace polyharm

#endif
