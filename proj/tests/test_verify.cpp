#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqgl21/errors.hpp"
#include "uqgl21/repbuilder.hpp"
#include "uqgl21/verify.hpp"

using namespace uqgl21;

namespace {
RealizationParams params(long t1, long t2, long t3) {
    RealizationParams p;
    p.j1 = HalfInt(t1);
    p.j2 = HalfInt(t2);
    p.j3 = HalfInt(t3);
    return p;
}
}  // namespace

TEST_CASE("matrix suites pass on built representations") {
    for (auto [t1, t2] : {std::pair<long, long>{2, 1}, {1, 0}, {0, 1}, {3, -2}}) {
        Representation rep = build_rep(params(t1, t2, 1));
        Report r = run_matrix_suite(rep);
        INFO(r.to_text());
        CHECK(r.ok());
    }
}

TEST_CASE("mutation suite: perturbed matrices fail at least one check") {
    Representation rep = build_rep(params(1, 2, 0));
    const QScalar q = qpow(HalfInt::whole(1));

    auto mutated = [&](Gen g, auto&& f) {
        Representation m = rep;
        m.matrices.at(g) = f(m.matrices.at(g));
        return m;
    };

    // 1: scale E21 by q -> the deformed commutator with E12 breaks.
    {
        Representation m = mutated(Gen::E21, [&](const QMatrix& x) { return q * x; });
        Report r = check_defining_relations(m);
        CHECK(!r.ok());
        bool found = false;
        for (const auto& c : r.checks)
            if (c.relation == "[E12,E21] = [H1]_q" && !c.passed) found = true;
        CHECK(found);
    }
    // 2: swap q and q^-1 in the bracket defining E13.
    {
        Representation m = rep;
        m.matrices.at(Gen::E13) =
            rep.matrix(Gen::E12) * rep.matrix(Gen::E23) -
            q * (rep.matrix(Gen::E23) * rep.matrix(Gen::E12));
        Report r = check_serre(m);
        CHECK(!r.ok());
    }
    // 3: zero out one nonzero E32 entry.
    {
        Representation m = rep;
        QMatrix& e32 = m.matrices.at(Gen::E32);
        bool cleared = false;
        for (int i = 0; i < e32.rows() && !cleared; ++i) {
            if (!e32.row(i).empty()) {
                e32.set(i, e32.row(i).begin()->first, QScalar::zero());
                cleared = true;
            }
        }
        REQUIRE(cleared);
        CHECK(!run_matrix_suite(m).ok());
    }
    // 4: scale E23 by -1.
    {
        Representation m = mutated(Gen::E23, [](const QMatrix& x) { return QScalar(-1) * x; });
        CHECK(!run_matrix_suite(m).ok());
    }
    // 5: shift one diagonal entry of E11.
    {
        Representation m = rep;
        QMatrix& e11 = m.matrices.at(Gen::E11);
        e11.set(0, 0, e11.at(0, 0) + QScalar::one());
        CHECK(!run_matrix_suite(m).ok());
    }
    // 6: transpose E12 into the E21 slot.
    {
        Representation m = rep;
        m.matrices.at(Gen::E21) = rep.matrix(Gen::E12);
        CHECK(!run_matrix_suite(m).ok());
    }
}

TEST_CASE("fock-level and matrix-level verdicts agree on a grid") {
    for (auto [t1, t2] : {std::pair<long, long>{1, 1}, {2, 0}, {3, 3}}) {
        RealizationParams p = params(t1, t2, 0);
        CHECK(verify_fock_relations(p, 4).ok());
        CHECK(run_matrix_suite(build_rep(p)).ok());
    }
}

TEST_CASE("all matrix entries are regular at z = 1") {
    Representation rep = build_rep(params(3, -1, 1));
    auto mats = evaluate_at_z(rep, mpq_class(1));  // throws on any pole
    CHECK(mats.size() == 12);
}

TEST_CASE("classical limit satisfies the supercommutator table") {
    Representation rep = build_rep(params(1, 2, 0));
    Report r = classical_limit_check(rep);
    INFO(r.to_text());
    CHECK(r.ok());
    // Spot checks of the table at q = 1.
    auto mats = evaluate_at_z(rep, mpq_class(1));
    RationalMatrix h1 = mats.at(Gen::E11) - mats.at(Gen::E22);
    RationalMatrix c = mats.at(Gen::E12) * mats.at(Gen::E21) -
                       mats.at(Gen::E21) * mats.at(Gen::E12);
    CHECK(c == h1);
    RationalMatrix h2 = mats.at(Gen::E22) + mats.at(Gen::E33);
    RationalMatrix a = mats.at(Gen::E23) * mats.at(Gen::E32) +
                       mats.at(Gen::E32) * mats.at(Gen::E23);
    CHECK(a == h2);
}

TEST_CASE("numeric verification away from q = 1") {
    Representation rep = build_rep(params(1, 2, 0));
    auto mats = evaluate_at_z(rep, mpq_class(2));  // q = 4
    Report r = check_relations_at(mats, mpq_class(2));
    INFO(r.to_text());
    CHECK(r.ok());
    auto mats2 = evaluate_at_z(rep, mpq_class(3, 2));  // q = 9/4
    CHECK(check_relations_at(mats2, mpq_class(3, 2)).ok());
}

TEST_CASE("non-integer Cartan eigenvalues are rejected") {
    Representation fake;
    fake.params = params(0, 0, 0);
    fake.basis = build_basis(fake.params);
    const int d = fake.dim();
    for (Gen g : kAllGens) fake.matrices.emplace(g, QMatrix(d, d));
    fake.matrices.at(Gen::E11).set(0, 0, QScalar::z_pow(1));  // q^(1/2) on the diagonal
    CHECK_THROWS_AS((void)check_defining_relations(fake), NonIntegerCartan);
}

TEST_CASE("reports locate the first mismatching entry") {
    Representation rep = build_rep(params(1, 1, 0));
    Representation m = rep;
    m.matrices.at(Gen::E21) = qpow(HalfInt::whole(1)) * rep.matrix(Gen::E21);
    Report r = check_defining_relations(m);
    bool located = false;
    for (const auto& c : r.checks) {
        if (!c.passed && !c.counterexample.empty() && !c.lhs.empty() && !c.rhs.empty())
            located = true;
    }
    CHECK(located);
}
