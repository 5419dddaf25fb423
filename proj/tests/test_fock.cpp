#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqgl21/fock.hpp"

using namespace uqgl21;

namespace {
FockVector mono(long n, int f13, int f23) { return FockVector::unit({n, f13, f23}); }
}

TEST_CASE("single-operator actions") {
    // a on (a+)^2 |0> = [2]_q (a+) |0>, with [2] from the quotient oracle.
    QScalar two_q = (QScalar::z_pow(4) - QScalar::z_pow(-4)) /
                    (QScalar::z_pow(2) - QScalar::z_pow(-2));
    CHECK(apply(LadderOp::BosonAnnihilate, mono(2, 0, 0)) == two_q * mono(1, 0, 0));
    // a13 on a23+ a13+ |0> = -a23+ |0> (one Koszul crossing).
    CHECK(apply(LadderOp::F13Annihilate, mono(0, 1, 1)) == -mono(0, 0, 1));
    CHECK(apply(LadderOp::BosonAnnihilate, mono(0, 0, 0)).is_zero());
    CHECK(apply(LadderOp::NumBoson, mono(3, 1, 0)) == QScalar(3) * mono(3, 1, 0));
}

TEST_CASE("distinct fermion modes anticommute") {
    FockVector a = apply(LadderOp::F23Create, apply(LadderOp::F13Create, mono(2, 0, 0)));
    FockVector b = apply(LadderOp::F13Create, apply(LadderOp::F23Create, mono(2, 0, 0)));
    CHECK(a == -b);
    CHECK(a == mono(2, 1, 1));
}

TEST_CASE("bosons commute with both fermion modes") {
    const std::vector<LadderOp> bosonic = {LadderOp::BosonCreate, LadderOp::BosonAnnihilate,
                                           LadderOp::NumBoson};
    const std::vector<LadderOp> fermionic = {LadderOp::F13Create, LadderOp::F13Annihilate,
                                             LadderOp::F23Create, LadderOp::F23Annihilate,
                                             LadderOp::NumF13, LadderOp::NumF23};
    for (long n = 0; n <= 10; ++n) {
        for (int f13 = 0; f13 <= 1; ++f13) {
            for (int f23 = 0; f23 <= 1; ++f23) {
                FockVector v = mono(n, f13, f23);
                for (LadderOp b : bosonic)
                    for (LadderOp f : fermionic) CHECK(apply(b, apply(f, v)) == apply(f, apply(b, v)));
            }
        }
    }
}

TEST_CASE("fermion nilpotency") {
    for (long n = 0; n <= 5; ++n) {
        for (int f13 = 0; f13 <= 1; ++f13) {
            for (int f23 = 0; f23 <= 1; ++f23) {
                FockVector v = mono(n, f13, f23);
                CHECK(apply(LadderOp::F13Create, apply(LadderOp::F13Create, v)).is_zero());
                CHECK(apply(LadderOp::F23Create, apply(LadderOp::F23Create, v)).is_zero());
            }
        }
    }
}

TEST_CASE("deformed oscillator and fermion relations up to n = 20") {
    Report r = check_heisenberg(20);
    INFO(r.to_text());
    CHECK(r.ok());
}

TEST_CASE("vacuum-only check") {
    CHECK(check_heisenberg(0).ok());
}

TEST_CASE("mutated boson action is caught with the first counterexample") {
    // Break the deformed commutator: make a a+ - a+ a = q^(-N) hold instead,
    // i.e. a (a+)^n |0> = (sum_k q^-k) (a+)^(n-1) |0>.
    FockApplier broken = [](LadderOp op, const FockVector& v) {
        if (op != LadderOp::BosonAnnihilate) return apply(op, v);
        FockVector out;
        for (const auto& [m, c] : v.terms()) {
            if (m.n == 0) continue;
            QScalar s = QScalar::zero();
            for (long k = 0; k < m.n; ++k) s += qpow(HalfInt::whole(-k));
            out.add({m.n - 1, m.f13, m.f23}, c * s);
        }
        return out;
    };
    Report r = check_heisenberg(5, broken);
    CHECK(!r.ok());
    for (const auto& c : r.checks) {
        if (c.relation == "a a+ - q a+ a = q^(-N)") {
            CHECK(!c.passed);
            CHECK(c.counterexample == FockMonomial{1, 0, 0}.str());
        }
    }
}

TEST_CASE("q-power of a fermion number via the expansion identity") {
    const QScalar q = qpow(HalfInt::whole(1));
    for (long n = 0; n <= 5; ++n) {
        for (int f13 = 0; f13 <= 1; ++f13) {
            for (int f23 = 0; f23 <= 1; ++f23) {
                FockVector v = mono(n, f13, f23);
                CHECK(apply_q_power_fermion(true, v) == (f13 ? q : QScalar::one()) * v);
                CHECK(apply_q_power_fermion(false, v) == (f23 ? q : QScalar::one()) * v);
            }
        }
    }
}

TEST_CASE("vector bookkeeping drops exact zeros") {
    FockVector v = mono(1, 0, 0);
    v.add({1, 0, 0}, QScalar(-1));
    CHECK(v.is_zero());
    CHECK(v.terms().empty());
}
