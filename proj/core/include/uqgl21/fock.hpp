#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>

#include "uqgl21/qscalar.hpp"
#include "uqgl21/report.hpp"

namespace uqgl21 {

/// Canonical Fock monomial a23+^f23 a13+^f13 (a+)^n |0> (in exactly this
/// factor order; fermionic operators collect a Koszul sign for every
/// fermionic factor they pass to reach their slot).
struct FockMonomial {
    long n = 0;
    int f13 = 0;
    int f23 = 0;

    friend constexpr auto operator<=>(const FockMonomial&, const FockMonomial&) = default;
    std::string str() const;
};

/// Finite linear combination of Fock monomials; zero coefficients are never
/// stored.
class FockVector {
  public:
    FockVector() = default;
    static FockVector unit(const FockMonomial& m) {
        FockVector v;
        v.terms_[m] = QScalar::one();
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<FockMonomial, QScalar>& terms() const { return terms_; }
    QScalar coeff(const FockMonomial& m) const;

    void add(const FockMonomial& m, const QScalar& c);
    FockVector& operator+=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(const FockVector& a);
    friend FockVector operator-(FockVector a, const FockVector& b) { return a += -b; }
    friend FockVector operator*(const QScalar& c, const FockVector& v);
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    std::map<FockMonomial, QScalar> terms_;
};

enum class LadderOp {
    BosonCreate,
    BosonAnnihilate,
    NumBoson,
    F13Create,
    F13Annihilate,
    NumF13,
    F23Create,
    F23Annihilate,
    NumF23,
};

/// Single-monomial action: returns the scalar factor and writes the image
/// monomial to *out.  A zero factor means the term dies (Pauli nilpotency or
/// annihilating the vacuum); *out is unspecified then.
QScalar apply_op(LadderOp op, const FockMonomial& m, FockMonomial* out);

/// Linear extension of apply_op.
FockVector apply(LadderOp op, const FockVector& v);

/// q^(N_alpha) on a fermion mode via the Maclaurin identity
/// q^(N) = 1 + q N - N (mode13 selects which fermion number).
FockVector apply_q_power_fermion(bool mode13, const FockVector& v);

using FockApplier = std::function<FockVector(LadderOp, const FockVector&)>;

/// Verifies the deformed oscillator and fermion relations on every canonical
/// monomial with boson occupation <= nmax (all four fermion sectors).  The
/// applier parameter exists so tests can feed a deliberately broken action.
Report check_heisenberg(long nmax, const FockApplier& applier = {});

}  // namespace uqgl21
