#pragma once

#include <stdexcept>
#include <string>

namespace uqgl21 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reduced denominator vanishes at the requested evaluation point.
struct SingularEvaluation : Error {
    using Error::Error;
};

/// A coefficient function was evaluated at an occupation where a
/// subexpression divides by zero.
struct SingularCoefficient : Error {
    SingularCoefficient(long n, const std::string& subexpr)
        : Error("singular coefficient at N=" + std::to_string(n) + " in " + subexpr),
          n(n), subexpr(subexpr) {}
    long n;
    std::string subexpr;
};

/// Image of a basis vector falls outside the span of the basis.
struct ExpansionFailure : Error {
    using Error::Error;
};

/// A subspace handed to quotient_rep is not closed under the generators.
struct NotInvariant : Error {
    using Error::Error;
};

/// A Cartan matrix has a non-integer diagonal entry, so its operator
/// q-bracket cannot be formed.
struct NonIntegerCartan : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), pos(pos) {}
    explicit ParseError(const std::string& what) : Error(what), pos(0) {}
    std::size_t pos;
};

struct SchemaVersionMismatch : Error {
    using Error::Error;
};

}  // namespace uqgl21
