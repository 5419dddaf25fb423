#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqgl21/coeff.hpp"
#include "uqgl21/errors.hpp"

using namespace uqgl21;

namespace {
const QScalar q = qpow(HalfInt::whole(1));
const QScalar one = QScalar::one();

// Direct substitution oracles, built from plain field arithmetic.
QScalar d1_direct(long n) { return (q + one) / (qpow(HalfInt::whole(n + 1)) + one); }
QScalar d2_direct(long n) {
    QScalar num = qint(n) - qint(n + 1) + one;
    QScalar den = (one - q) * (one - q.inverse()) * qint(n + 1) * qint(n);
    return num / den;
}
QScalar d3_direct(long n) {
    return (one - qpow(HalfInt::whole(n + 1))) / (qint(n + 1) * (one - q));
}
// The fourth coefficient function in the factorization-consistent form.
QScalar d4_direct(long n) { return qpow(HalfInt::whole(n + 1)) * d1_direct(n) * d1_direct(n + 1); }
}  // namespace

TEST_CASE("standard coefficient functions at frozen points") {
    CHECK(standard_d(1).eval(0).is_one());
    CHECK(standard_d(3).eval(0).is_one());
    CHECK(standard_d(2).eval(1) == qint(2).inverse());  // 1/(q + q^-1)
    CHECK(standard_d(3).eval(-2) == qpow(HalfInt::whole(-1)));
    // Fourth function: q(q+1)/(q^2+1); equals the naive rational form only at q = 1.
    CHECK(standard_d(4).eval(0).str() == "(z^4 + z^2)/(z^4 + 1)");
    CHECK(standard_d(4).eval(0).eval_z(mpq_class(1)) == 1);
}

TEST_CASE("singular evaluations are reported with the offending point") {
    try {
        (void)standard_d(2).eval(0);
        FAIL("expected SingularCoefficient");
    } catch (const SingularCoefficient& e) {
        CHECK(e.n == 0);
    }
    CHECK_THROWS_AS((void)standard_d(3).eval(-1), SingularCoefficient);
}

TEST_CASE("two-path agreement with direct substitution") {
    for (long n = 1; n <= 10; ++n) {
        CHECK(standard_d(1).eval(n) == d1_direct(n));
        CHECK(standard_d(2).eval(n) == d2_direct(n));
        CHECK(standard_d(3).eval(n) == d3_direct(n));
        CHECK(standard_d(4).eval(n) == d4_direct(n));
    }
    CHECK(standard_d(1).eval(-1) == d1_direct(-1));
}

TEST_CASE("first coefficient function never vanishes where ratios need it") {
    for (long n = -1; n <= 20; ++n) CHECK(!standard_d(1).eval(n).is_zero());
}

TEST_CASE("the composite [N] D2/D3 is finite on positive occupations") {
    for (long n = 1; n <= 20; ++n) {
        QScalar v = qint(n) * standard_d(2).eval(n) / standard_d(3).eval(n);
        CHECK(!v.is_zero());
    }
}

TEST_CASE("the naive rational form of the fourth function agrees only at q = 1") {
    CoeffFn naive = parse_coeff_fn(
        "((N+2)*(1-q)*(1-qpow(-1)) + (1-qpow(N+2))*(qpow(-1)-qpow(-N-1)))"
        "/((1-qpow(-1))*(1-q)*qnum(N+2)*qnum(N+1))");
    bool any_generic_difference = false;
    for (long n = 0; n <= 8; ++n) {
        QScalar a = naive.eval(n), b = standard_d(4).eval(n);
        CHECK(a.eval_z(mpq_class(1)) == b.eval_z(mpq_class(1)));
        if (!(a == b)) any_generic_difference = true;
    }
    CHECK(any_generic_difference);
}

TEST_CASE("shift semantics") {
    CHECK(shift(standard_d(1), -1).eval(1) == standard_d(1).eval(0));
    CoeffFn f = parse_coeff_fn("qnum(2*N-1) + qpow(N)/(N+7)");
    for (long n = -5; n <= 5; ++n) CHECK(shift(f, 0).eval(n) == f.eval(n));
    CHECK(shift(shift(standard_d(3), -2), 2).eval(3) == standard_d(3).eval(3));
}

TEST_CASE("expression grammar") {
    CoeffFn d1 = parse_coeff_fn("(q+1)/(qpow(N+1)+1)");
    for (long n = 0; n <= 6; ++n) CHECK(d1.eval(n) == standard_d(1).eval(n));

    CHECK(parse_coeff_fn("qpow(N + 1/2)").eval(1) == QScalar::z_pow(3));
    CHECK(parse_coeff_fn("qnum(2*N - 1)").eval(2) == qint(3));
    CHECK(parse_coeff_fn("-N*N + 1").eval(3) == QScalar(-8));
    CHECK(parse_coeff_fn("3/2").eval(0) == QScalar(mpq_class(3, 2)));

    CHECK_THROWS_AS(parse_coeff_fn("qpow(N*N)"), ParseError);
    CHECK_THROWS_AS(parse_coeff_fn("qnum(N/2)"), ParseError);
    CHECK_THROWS_AS(parse_coeff_fn("qpow(q)"), ParseError);
    CHECK_THROWS_AS(parse_coeff_fn("foo(N)"), ParseError);
    CHECK_THROWS_AS(parse_coeff_fn("1 +"), ParseError);
    CHECK_THROWS_AS(parse_coeff_fn("(1"), ParseError);
}

TEST_CASE("printed text re-parses to the same function") {
    for (int i = 1; i <= 4; ++i) {
        CoeffFn f = standard_d(i);
        CoeffFn back = parse_coeff_fn(f.str());
        for (long n = 1; n <= 6; ++n) CHECK(back.eval(n) == f.eval(n));
    }
    CoeffFn g = parse_coeff_fn("qpow(-N-1)*qnum(N+2) - 5/3");
    CoeffFn gback = parse_coeff_fn(g.str());
    for (long n = -4; n <= 4; ++n) CHECK(gback.eval(n) == g.eval(n));
}

TEST_CASE("family files") {
    CoeffFamily fam = CoeffFamily::parse_file_text(
        "# custom family\nF1 = 1\nF2 = qpow(N)\n\nF3 = qnum(N+1)  # third\nF4 = N+2\n");
    CHECK(fam.f[0].eval(3).is_one());
    CHECK(fam.f[1].eval(2) == qpow(HalfInt::whole(2)));
    CHECK(fam.f[2].eval(1) == qint(2));
    CHECK(fam.f[3].eval(1) == QScalar(3));
    CHECK_THROWS_AS(CoeffFamily::parse_file_text("F1 = 1\nF2 = 1\nF3 = 1\n"), ParseError);
    CHECK_THROWS_AS(CoeffFamily::parse_file_text("F5 = 1"), ParseError);
}
