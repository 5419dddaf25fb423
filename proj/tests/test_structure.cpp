#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqgl21/errors.hpp"
#include "uqgl21/structure.hpp"
#include "uqgl21/verify.hpp"

using namespace uqgl21;

namespace {
RealizationParams params(long t1, long t2) {
    RealizationParams p;
    p.j1 = HalfInt(t1);
    p.j2 = HalfInt(t2);
    p.j3 = HalfInt(0);
    return p;
}
}  // namespace

TEST_CASE("classification under generic-q semantics") {
    CHECK(classify(HalfInt(2), HalfInt(1)).kind == RepKind::Typical);

    RepClass n2 = classify(HalfInt(1), HalfInt(0));
    CHECK(n2.kind == RepKind::Nontypical2);
    CHECK(n2.predicted_towers == std::vector<int>{1, 2});
    CHECK(n2.str() == "Nontypical2, invariant = V1⊕V2");

    RepClass n1 = classify(HalfInt(1), HalfInt(-2));
    CHECK(n1.kind == RepKind::Nontypical1);
    CHECK(n1.predicted_towers == std::vector<int>{1, 3});

    // Both conditions vanish only at J1 = -1/2; kept defensively.
    CHECK(classify(HalfInt(-1), HalfInt(0)).kind == RepKind::Excluded);
}

TEST_CASE("closures from single seeds") {
    Representation typical = build_rep(params(2, 1));
    for (int i : {0, 3, typical.dim() - 1}) {
        Subspace c = invariant_closure(typical, {basis_seed(typical, i)});
        CHECK(c.is_full());
    }

    Representation n2 = build_rep(params(1, 0));
    Subspace c = invariant_closure(n2, {basis_seed(n2, 0)});
    CHECK(c.dim() == 3);
    CHECK(subspace_equals_towers(n2, c, {1, 2}));

    CHECK(invariant_closure(n2, {}).dim() == 0);
}

TEST_CASE("quotient dimensions and induced relations") {
    {
        Representation rep = build_rep(params(1, 0));  // class 2 at (1/2, 0)
        Subspace sub = invariant_closure(rep, tower_seeds(rep, 1));
        Representation q = quotient_rep(rep, sub);
        CHECK(q.dim() == 5);
        CHECK(run_matrix_suite(q).ok());
        CHECK(is_irreducible(q));
        CHECK(!is_irreducible(rep));
    }
    {
        Representation rep = build_rep(params(1, -2));  // class 1 at (1/2, -1)
        Subspace sub = invariant_closure(rep, tower_seeds(rep, 1));
        CHECK(subspace_equals_towers(rep, sub, {1, 3}));
        Representation q = quotient_rep(rep, sub);
        CHECK(q.dim() == 3);
        CHECK(run_matrix_suite(q).ok());
        CHECK(is_irreducible(q));
    }
}

TEST_CASE("quotient by the zero subspace returns the original matrices") {
    Representation rep = build_rep(params(1, 1));
    Subspace zero(rep.dim());
    Representation q = quotient_rep(rep, zero);
    CHECK(q.dim() == rep.dim());
    for (Gen g : kAllGens) CHECK(q.matrix(g) == rep.matrix(g));
}

TEST_CASE("non-invariant subspaces are rejected") {
    Representation rep = build_rep(params(1, 1));
    Subspace sub(rep.dim());
    sub.insert(basis_seed(rep, rep.index_of({2, HalfInt(0)})));
    CHECK_THROWS_AS((void)quotient_rep(rep, sub), NotInvariant);
}

TEST_CASE("no proper invariant subspace contains the whole fourth tower") {
    for (auto [t1, t2] : {std::pair<long, long>{1, 0}, {1, -2}, {3, 0}, {2, -3}}) {
        Representation rep = build_rep(params(t1, t2));
        for (int i = 0; i < rep.dim(); ++i) {
            Subspace c = invariant_closure(rep, {basis_seed(rep, i)});
            if (c.is_full()) continue;
            bool contains_all_v4 = true;
            for (const auto& s : tower_seeds(rep, 4))
                if (!c.contains(s)) contains_all_v4 = false;
            CHECK(!contains_all_v4);
        }
    }
}

TEST_CASE("every nonzero closure meets the invariant subspace in nontypical modules") {
    for (auto [t1, t2] : {std::pair<long, long>{1, 0}, {1, -2}, {2, 0}, {3, -4}, {3, 0}}) {
        RepClass rc = classify(HalfInt(t1), HalfInt(t2));
        if (rc.kind == RepKind::Typical) continue;
        Representation rep = build_rep(params(t1, t2));
        Subspace inv = invariant_closure(rep, tower_seeds(rep, 1));
        for (int i = 0; i < rep.dim(); ++i) {
            Subspace c = invariant_closure(rep, {basis_seed(rep, i)});
            // dim(c) + dim(inv) - dim(c + inv) > 0.
            Subspace sum(rep.dim());
            for (const auto& r : c.rows()) sum.insert(r);
            for (const auto& r : inv.rows()) sum.insert(r);
            CHECK(c.dim() + inv.dim() - sum.dim() > 0);
        }
    }
}

TEST_CASE("subspace reduction is exact") {
    Representation rep = build_rep(params(1, 1));
    Subspace s(rep.dim());
    auto v = basis_seed(rep, 2);
    CHECK(s.insert(v).has_value());
    CHECK(!s.insert(v).has_value());
    CHECK(s.contains(v));
    CHECK(!s.contains(basis_seed(rep, 3)));
    CHECK_THROWS_AS((void)s.insert(std::vector<QScalar>(3, QScalar::one())), Error);
}
