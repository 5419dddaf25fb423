#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace uqgl21 {

/// Dense polynomial in z with rational coefficients.
/// Invariant: coefficient vector is empty (the zero polynomial) or its last
/// entry is nonzero.
class Poly {
  public:
    Poly() = default;
    explicit Poly(mpq_class c);
    /// c[i] is the coefficient of z^i; trailing zeros are trimmed.
    explicit Poly(std::vector<mpq_class> c);

    static Poly one() { return Poly(mpq_class(1)); }
    static Poly monomial(mpq_class c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }
    const mpq_class& leading() const { return c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Multiplicity of the root z = 0 (0 for the zero polynomial).
    std::size_t low_order() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const mpq_class& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
    /// Exact division; throws std::logic_error when the remainder is nonzero.
    static Poly div_exact(const Poly& a, const Poly& b);
    /// Monic gcd (1 when either argument is a nonzero constant).
    static Poly gcd(Poly a, Poly b);

    mpq_class eval(const mpq_class& z0) const;
    /// Drop a factor z^k (valid only when low_order() >= k).
    Poly shifted_down(std::size_t k) const;
    Poly shifted_up(std::size_t k) const;

  private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Laurent polynomial: z^low * poly, with poly(0) != 0 unless zero.
struct Laurent {
    long low = 0;
    Poly p;

    Laurent() = default;
    Laurent(long low, Poly poly);
    static Laurent from_poly(const Poly& poly);

    bool is_zero() const { return p.is_zero(); }
    long min_exp() const { return low; }
    long max_exp() const { return low + p.degree(); }

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.low == b.low && a.p == b.p;
    }
};

}  // namespace uqgl21
