#pragma once

#include <array>
#include <memory>
#include <string>

#include "uqgl21/qscalar.hpp"

namespace uqgl21 {

/// Symbolic coefficient function of the boson number operator N, built from
/// {rational constants, a*N+b, q^(a*N+b), [a*N+b]_q} closed under + - * /.
/// Evaluation happens only at concrete integers and is strict: any division
/// by a zero value raises SingularCoefficient.
class CoeffFn {
  public:
    CoeffFn() = default;

    static CoeffFn constant(const QScalar& c);
    static CoeffFn constant(long c) { return constant(QScalar(c)); }
    /// a*N + b.
    static CoeffFn affine(const mpq_class& a, const mpq_class& b);
    static CoeffFn var_n() { return affine(1, 0); }
    /// q^(a*N + b), integer a, half-integer b.
    static CoeffFn q_power(long a, HalfInt b);
    /// [a*N + b]_q, integers a, b.
    static CoeffFn q_number(long a, long b);

    bool valid() const { return node_ != nullptr; }

    friend CoeffFn operator+(const CoeffFn& a, const CoeffFn& b);
    friend CoeffFn operator-(const CoeffFn& a, const CoeffFn& b);
    friend CoeffFn operator*(const CoeffFn& a, const CoeffFn& b);
    friend CoeffFn operator/(const CoeffFn& a, const CoeffFn& b);
    friend CoeffFn operator-(const CoeffFn& a);

    /// g with g(n) = f(n + k), by structural substitution N -> N + k.
    CoeffFn shifted(long k) const;

    /// Value at N = n.  Throws SingularCoefficient naming the offending
    /// subexpression.
    QScalar eval(long n) const;

    /// Re-parseable text in the grammar of parse_coeff_fn.
    std::string str() const;

    /// Identity of the underlying expression node (for caching).
    const void* id() const { return node_.get(); }

    struct Node;

  private:
    explicit CoeffFn(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// The exact coefficient functions of the q-exponential factorization,
/// i = 1..4.
CoeffFn standard_d(int i);

QScalar eval_coeff(const CoeffFn& f, long n);
CoeffFn shift(const CoeffFn& f, long k);

/// Parses the infix grammar over N, q, integers/rationals, qnum(a*N+b),
/// qpow(a*N+b), with + - * / and parentheses.  Example: (q+1)/(qpow(N+1)+1).
CoeffFn parse_coeff_fn(const std::string& text);

/// The four coefficient functions used by a realization.  Slot i holds F_i
/// (standard family: F_i = D_i).
struct CoeffFamily {
    std::array<CoeffFn, 4> f;
    bool is_standard = false;

    static CoeffFamily standard();
    /// All four slots from one expression text.
    static CoeffFamily uniform(const std::string& expr_text);
    /// Parses a family file: lines "F1 = <expr>" .. "F4 = <expr>", '#'
    /// comments and blank lines allowed.
    static CoeffFamily parse_file_text(const std::string& text);

    const CoeffFn& operator[](int i) const { return f.at(static_cast<std::size_t>(i - 1)); }
};

}  // namespace uqgl21
