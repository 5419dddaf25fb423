#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "uqgl21/errors.hpp"
#include "uqgl21/qscalar.hpp"

using namespace uqgl21;

namespace {

// Independent oracle: [n]_q through the defining quotient
// (q^n - q^-n) / (q - q^-1), reduced by the field's polynomial division.
QScalar oracle_qint(long n) {
    QScalar num = QScalar::z_pow(2 * n) - QScalar::z_pow(-2 * n);
    QScalar den = QScalar::z_pow(2) - QScalar::z_pow(-2);
    return num / den;
}

QScalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<long> coef(-5, 5), deg(0, 4), off(-3, 3);
    auto poly = [&](bool nonzero) {
        std::vector<mpq_class> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        Poly p(std::move(c));
        if (nonzero && p.is_zero()) p = Poly::one();
        return p;
    };
    Poly den = poly(true);
    return QScalar(Laurent(off(rng), poly(false)), den);
}

}  // namespace

TEST_CASE("q-numbers: frozen examples and quotient-definition oracle") {
    CHECK(qint(0).is_zero());
    CHECK(qint(2).str() == "(z^2 + z^-2)/(1)");
    CHECK(qint(-1) == QScalar(-1));
    for (long n = -20; n <= 20; ++n) CHECK(qint(n) == oracle_qint(n));
}

TEST_CASE("q-powers") {
    CHECK(qpow(HalfInt::whole(0)).is_one());
    CHECK(qpow(HalfInt(1)) == QScalar::z_pow(1));   // q^(1/2) = z
    CHECK(qpow(HalfInt::whole(-2)) == QScalar::z_pow(-4));
}

TEST_CASE("q-factorials against oracle-expanded q-integers") {
    CHECK(qfact(0).is_one());
    CHECK(qfact(2) == oracle_qint(2));
    CHECK(qfact(3) == oracle_qint(2) * oracle_qint(3));
}

TEST_CASE("evaluation at numeric points") {
    CHECK(qint(2).eval_q(mpq_class(1)) == 2);
    CHECK(qint(3).eval_q(mpq_class(4)) == mpq_class(273, 16));
    QScalar pole = QScalar::one() / (QScalar::z_pow(1) - QScalar(1));
    CHECK_THROWS_AS((void)pole.eval_z(mpq_class(1)), SingularEvaluation);
    CHECK_THROWS_AS((void)qint(2).eval_q(mpq_class(3)), Error);  // not a square
    for (long n = -20; n <= 20; ++n) CHECK(qint(n).eval_z(mpq_class(1)) == n);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(20240817);
    int inverses = 0;
    for (int i = 0; i < 1000; ++i) {
        QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) * c == a * c + b * c);
        if (!a.is_zero()) {
            CHECK((a * a.inverse()).is_one());
            ++inverses;
        }
        CHECK(a + QScalar::zero() == a);
        CHECK(a * QScalar::one() == a);
        CHECK((a - a).is_zero());
    }
    CHECK(inverses > 900);
}

TEST_CASE("q-number symmetries") {
    for (long n = 1; n <= 20; ++n) {
        CHECK(qint(-n) == -qint(n));
        for (long m = 1; m <= 20; m += 3) CHECK(qint(n) * qint(m) == qint(m) * qint(n));
    }
}

TEST_CASE("q-power additivity on random half-integer pairs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> tw(-40, 40);
    for (int i = 0; i < 200; ++i) {
        HalfInt a(tw(rng)), b(tw(rng));
        CHECK(qpow(a) * qpow(b) == qpow(a + b));
    }
}

TEST_CASE("canonical string round-trips bit-exactly") {
    std::mt19937 rng(99);
    for (int i = 0; i < 300; ++i) {
        QScalar a = random_scalar(rng);
        std::string s = a.str();
        QScalar back = QScalar::parse(s);
        CHECK(back == a);
        CHECK(back.str() == s);
    }
    CHECK(QScalar::parse("(z^2 + z^-2)/(1)") == qint(2));
    CHECK_THROWS_AS(QScalar::parse("(z^2"), ParseError);
    CHECK_THROWS_AS(QScalar::parse("(1)/(0)"), ParseError);
    CHECK_THROWS_AS(QScalar::parse("(1)/(z^-1)"), ParseError);
}

TEST_CASE("canonical form invariants") {
    // Denominator monic, no z factor, coprime with the numerator.
    QScalar a = QScalar(Laurent(0, Poly({mpq_class(0), mpq_class(2), mpq_class(2)})),
                        Poly({mpq_class(0), mpq_class(0), mpq_class(4), mpq_class(4)}));
    // (2z + 2z^2) / (4z^2 + 4z^3) = z^-1 / 2.
    CHECK(a.str() == "(1/2*z^-1)/(1)");
    CHECK(a == QScalar(mpq_class(1, 2)) * QScalar::z_pow(-1));
}

TEST_CASE("half-integer parsing and printing") {
    CHECK(HalfInt::parse("3/2").twice() == 3);
    CHECK(HalfInt::parse("-1").twice() == -2);
    CHECK(HalfInt::parse("0").twice() == 0);
    CHECK(HalfInt(3).str() == "3/2");
    CHECK(HalfInt(-2).str() == "-1");
    CHECK_THROWS_AS(HalfInt::parse("x"), ParseError);
    CHECK_THROWS_AS(HalfInt::parse("1/3"), ParseError);
}
