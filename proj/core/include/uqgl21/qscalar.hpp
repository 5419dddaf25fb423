#pragma once

#include <gmpxx.h>

#include <string>

#include "uqgl21/halfint.hpp"
#include "uqgl21/laurent.hpp"

namespace uqgl21 {

/// Element of Q(z), z = q^(1/2), kept in canonical reduced form:
///  - denominator is a monic true polynomial with nonzero constant term
///    (all z-offsets live in the numerator's Laurent offset),
///  - gcd(numerator, denominator) = 1.
/// Equality is structural and agrees with cross-multiplication.
class QScalar {
  public:
    QScalar() : num_(), den_(Poly::one()) {}
    QScalar(long n) : QScalar(mpq_class(n)) {}  // NOLINT: implicit by design
    explicit QScalar(const mpq_class& c);
    QScalar(Laurent num, Poly den);

    static QScalar zero() { return QScalar(); }
    static QScalar one() { return QScalar(1); }
    /// z^k.
    static QScalar z_pow(long k);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// True when the value is a rational constant (no z dependence).
    bool is_rational() const;
    /// Valid only when is_rational().
    mpq_class as_rational() const;
    bool is_integer() const;

    const Laurent& num() const { return num_; }
    const Poly& den() const { return den_; }

    QScalar operator-() const;
    QScalar inverse() const;
    friend QScalar operator+(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a, const QScalar& b);
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend QScalar operator/(const QScalar& a, const QScalar& b);
    QScalar& operator+=(const QScalar& b) { return *this = *this + b; }
    QScalar& operator-=(const QScalar& b) { return *this = *this - b; }
    QScalar& operator*=(const QScalar& b) { return *this = *this * b; }
    QScalar& operator/=(const QScalar& b) { return *this = *this / b; }
    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    QScalar pow(long k) const;

    /// Exact value at z = z0 (z0 nonzero).  Throws SingularEvaluation when
    /// the reduced denominator vanishes at z0.
    mpq_class eval_z(const mpq_class& z0) const;
    /// Exact value at q = q0; q0 must be a nonzero square of a rational
    /// (evaluation happens at z0 = +sqrt(q0)).
    mpq_class eval_q(const mpq_class& q0) const;

    /// Canonical string, e.g. "(z^2 + z^-2)/(1)".  Round-trips bit-exactly
    /// through parse().
    std::string str() const;
    static QScalar parse(const std::string& s);

  private:
    void normalize();
    Laurent num_;
    Poly den_;
};

/// q-number [n]_q as a Laurent polynomial in z (pole-free at q = 1).
QScalar qint(long n);
/// q^k for half-integer k, i.e. z^(2k).
QScalar qpow(HalfInt k);
/// q-factorial [n]_q! = [1][2]...[n].
QScalar qfact(long n);
/// True if q0 is the square of a rational; then *z0 = +sqrt(q0).
bool rational_sqrt(const mpq_class& q0, mpq_class* z0);

}  // namespace uqgl21
