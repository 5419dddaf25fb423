#include "uqgl21/realization.hpp"

#include "uqgl21/errors.hpp"

namespace uqgl21 {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::H1: return "H1";
        case Gen::H2: return "H2";
        case Gen::H3: return "H3";
        case Gen::E11: return "E11";
        case Gen::E22: return "E22";
        case Gen::E33: return "E33";
        case Gen::E12: return "E12";
        case Gen::E21: return "E21";
        case Gen::E23: return "E23";
        case Gen::E32: return "E32";
        case Gen::E13: return "E13";
        case Gen::E31: return "E31";
    }
    return "?";
}

std::optional<Gen> gen_from_name(const std::string& name) {
    for (Gen g : kAllGens)
        if (name == gen_name(g)) return g;
    return std::nullopt;
}

bool Realization::is_diagonal(Gen g) {
    switch (g) {
        case Gen::H1:
        case Gen::H2:
        case Gen::H3:
        case Gen::E11:
        case Gen::E22:
        case Gen::E33:
            return true;
        default:
            return false;
    }
}

long Realization::h_eigenvalue(int i, const FockMonomial& m) const {
    switch (i) {
        case 1: return p_.j1.twice() - 2 * m.n + m.f23 - m.f13;
        case 2: return p_.j2.twice() + m.n + m.f13;
        case 3: return p_.j3.twice() + m.f13 + m.f23;
    }
    throw Error("h_eigenvalue: bad index");
}

long Realization::diagonal_eigenvalue(Gen g, const FockMonomial& m) const {
    switch (g) {
        case Gen::H1: return h_eigenvalue(1, m);
        case Gen::H2: return h_eigenvalue(2, m);
        case Gen::H3: return h_eigenvalue(3, m);
        case Gen::E11: return h_eigenvalue(1, m) + h_eigenvalue(2, m) - h_eigenvalue(3, m);
        case Gen::E22: return h_eigenvalue(2, m) - h_eigenvalue(3, m);
        case Gen::E33: return h_eigenvalue(3, m);
        default: throw Error("diagonal_eigenvalue: not a diagonal generator");
    }
}

Realization::Realization(RealizationParams p) : p_(std::move(p)) {
    if (p_.j1.twice() < 0) throw Error("Realization: 2*j1 must be a nonnegative integer");
    for (int i = 1; i <= 4; ++i)
        if (!p_.coeffs[i].valid()) throw Error("Realization: incomplete coefficient family");
    build_words();
}

// ---------------------------------------------------------------------------
// Operator word tables.

namespace {
constexpr LadderOp A = LadderOp::BosonAnnihilate;
constexpr LadderOp C = LadderOp::BosonCreate;
constexpr LadderOp f13a = LadderOp::F13Annihilate;
constexpr LadderOp f13c = LadderOp::F13Create;
constexpr LadderOp f23a = LadderOp::F23Annihilate;
constexpr LadderOp f23c = LadderOp::F23Create;
constexpr LadderOp N13 = LadderOp::NumF13;
constexpr LadderOp N23 = LadderOp::NumF23;
}  // namespace

void Realization::build_words() {
    const long t1 = p_.j1.twice();  // 2*J1
    const long t2 = p_.j2.twice();  // 2*J2

    auto op = [](LadderOp o) { return Factor{true, o, CoeffFn()}; };
    auto fn = [](const CoeffFn& f) { return Factor{false, LadderOp::NumBoson, f}; };
    auto term = [this](Gen g, std::vector<Factor> fs) {
        words_[g].push_back(Term{std::move(fs)});
    };

    const CoeffFn one = CoeffFn::constant(1);
    const CoeffFn F1 = p_.coeffs[1], F2 = p_.coeffs[2], F3 = p_.coeffs[3], F4 = p_.coeffs[4];
    auto qp = [](long a, long b) { return CoeffFn::q_power(a, HalfInt::whole(b)); };
    auto qn = [](long a, long b) { return CoeffFn::q_number(a, b); };
    // [N]_q and [N+1]_q as standalone factors so that a vanishing q-number
    // short-circuits the (possibly singular) ratio to its left.
    const CoeffFn numN = qn(1, 0), numN1 = qn(1, 1);

    // E12.
    term(Gen::E12, {op(A), op(f23a), op(f23c), op(f13a), op(f13c)});
    term(Gen::E12, {op(A), fn(F1.shifted(-1) / F1), op(N23), op(f13a), op(f13c)});
    term(Gen::E12, {op(A), fn(F4.shifted(-1) / F4), op(N13), op(N23)});
    term(Gen::E12, {fn(F2 / F3), fn(numN), op(f23c), op(f13a)});
    term(Gen::E12, {fn(-((F1 / F1.shifted(1)) * (F2.shifted(1) / F3))), fn(numN1), op(f23c),
                    op(f13a)});
    term(Gen::E12, {op(A), fn(F3.shifted(-1) / F3), op(N13), op(f23a), op(f23c)});

    // E21.
    const CoeffFn kappa = -qp(0, -(t1 + 1));
    term(Gen::E21, {fn(kappa), fn(F2 / F1.shifted(-1)), op(C), op(N23), op(f13a), op(f13c)});
    term(Gen::E21, {fn(kappa), fn(F2 / F1.shifted(-1)), fn(-(F2.shifted(-1) / F3.shifted(-2))),
                    op(C), op(C), op(f23c), op(f13a)});
    term(Gen::E21, {fn(kappa), fn(F3 / F1), op(f13c), op(f23a)});
    term(Gen::E21, {fn(kappa), fn(F3 / F1), op(f13c), op(f23a), fn(-(F2 / F3.shifted(-1))),
                    op(C), op(f23c), op(f13a)});
    term(Gen::E21, {fn(qn(-1, t1 + 1)), op(C), op(f23a), op(f23c), op(f13a), op(f13c)});
    term(Gen::E21, {fn(qn(-1, t1 + 2)), fn(F1 / F1.shifted(-1)), op(C), op(N23), op(f13a),
                    op(f13c)});
    term(Gen::E21, {fn(qn(-1, t1 + 1) * (F2 / F3.shifted(-2)) -
                       qn(-1, t1 + 2) * (F1 / F1.shifted(-1)) *
                           (F2.shifted(-1) / F3.shifted(-2))),
                    op(C), op(C), op(f23c), op(f13a)});
    term(Gen::E21, {fn(qn(-1, t1)), fn(F3 / F3.shifted(-1)), op(C), op(N13), op(f23a), op(f23c)});
    term(Gen::E21, {fn(qn(-1, t1 + 1)), fn(F4 / F4.shifted(-1)), op(C), op(N13), op(N23)});

    // E13.  The N23 term reads q^(N+1), one power above the naive reading
    // (same normalization as the final E23 term).
    term(Gen::E13, {fn(qp(1, 0) / F3), op(f13a), op(f23a), op(f23c)});
    term(Gen::E13, {fn(qp(1, 1) * (F1 / F4)), op(f13a), op(N23)});

    // E23.  The final N23 term carries one more q than the naive reading;
    // this is the unique form consistent with the bracket defining E13 and
    // with the coherent-state images of the module basis.
    term(Gen::E23, {fn(one / (qp(1, 0) * F1)), op(f23a), op(f13a), op(f13c)});
    term(Gen::E23, {fn(-(one / (qp(1, 0) * F1))), fn(F2 / F3.shifted(-1)), op(C), op(f13a),
                    op(f23a), op(f23c)});
    term(Gen::E23, {fn(-qp(-1, 1)), fn(F2 / F4.shifted(-1)), op(C), op(f13a), op(N23)});
    term(Gen::E23, {fn(F3 / (qp(1, 0) * F4)), op(f23a), op(N13)});
    term(Gen::E23, {fn(one / F3.shifted(-1)), op(C), op(f13a), op(f23a), op(f23c)});
    term(Gen::E23, {fn(qp(0, 1) * (F1 / F4.shifted(-1))), op(C), op(f13a), op(N23)});

    // E32.
    term(Gen::E32, {fn(qp(0, t2)), fn(F2), fn(numN), op(f23c), op(f13a), op(f13c)});
    term(Gen::E32, {fn(qn(0, t2)), fn(F1), op(f23c), op(f13a), op(f13c)});
    term(Gen::E32, {fn(qp(0, t2)), fn(F3), op(A), op(f13c), op(f23a), op(f23c)});
    term(Gen::E32, {fn(F4 / F3), fn(qn(0, t2 + 1)), op(f23c), op(N13)});
    term(Gen::E32, {fn(qp(0, t2 - 1)), fn(F4), op(A), op(f13c), fn(one / F1), op(N23)});
    term(Gen::E32, {fn(-qp(0, t2 - 1)), fn(F4), op(A), op(f13c), fn(one / F1),
                    fn(F2 / F3.shifted(-1)), op(C), op(f23c), op(f13a)});
    term(Gen::E32, {fn(-qp(0, t2)), fn(F4), fn(one / F3), op(f23c), op(N13)});
}

QScalar Realization::eval_cached(const CoeffFn& f, long n) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(f.id(), n);
    auto it = coeff_cache_.find(key);
    if (it != coeff_cache_.end()) return it->second;
    QScalar v = f.eval(n);
    coeff_cache_.emplace(key, v);
    return v;
}

std::optional<std::pair<QScalar, FockMonomial>> Realization::apply_term(
    const Term& t, const FockMonomial& m) const {
    // Phase 1: ladder operators, rightmost first; each coefficient function
    // records the boson occupation at its own slot.  A vanishing operator
    // factor kills the term before any coefficient function is touched.
    QScalar coef = QScalar::one();
    FockMonomial cur = m;
    std::vector<std::pair<const CoeffFn*, long>> pending;  // rightmost first
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
        if (it->is_op) {
            FockMonomial next;
            QScalar f = apply_op(it->op, cur, &next);
            if (f.is_zero()) return std::nullopt;
            coef *= f;
            cur = next;
        } else {
            pending.emplace_back(&it->fn, cur.n);
        }
    }
    // Phase 2: coefficient functions, rightmost first, dropping the term as
    // soon as the accumulated coefficient is exactly zero.
    for (const auto& [fn, n] : pending) {
        QScalar v = eval_cached(*fn, n);
        coef *= v;
        if (coef.is_zero()) return std::nullopt;
    }
    return std::make_pair(std::move(coef), cur);
}

const FockVector& Realization::apply_monomial(Gen g, const FockMonomial& m) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = action_cache_.find({g, m});
        if (it != action_cache_.end()) return it->second;
    }
    FockVector out;
    if (is_diagonal(g)) {
        out.add(m, QScalar(diagonal_eigenvalue(g, m)));
    } else if (g == Gen::E31) {
        // Non-Chevalley generator realized through its defining bracket
        // -[E21, E32]_{q^-1}; the printed closed word for it carries
        // several inconsistent powers of q, the bracket form does not.
        FockVector v = FockVector::unit(m);
        out = -(apply(Gen::E21, apply(Gen::E32, v)) -
                qpow(HalfInt::whole(-1)) * apply(Gen::E32, apply(Gen::E21, v)));
    } else {
        for (const Term& t : words_.at(g)) {
            if (auto r = apply_term(t, m)) out.add(r->second, r->first);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return action_cache_.emplace(std::make_pair(g, m), std::move(out)).first->second;
}

FockVector Realization::apply(Gen g, const FockVector& v) const {
    FockVector out;
    for (const auto& [m, c] : v.terms()) {
        const FockVector& im = apply_monomial(g, m);
        out += c * im;
    }
    return out;
}

FockVector gamma(Gen g, const RealizationParams& p, const FockVector& v) {
    return Realization(p).apply(g, v);
}

// ---------------------------------------------------------------------------
// Defining-relation suite on the Fock space.

Report verify_fock_relations(const Realization& rz, long nmax) {
    const QScalar q = qpow(HalfInt::whole(1));
    const QScalar qinv = qpow(HalfInt::whole(-1));

    auto ap = [&rz](Gen g, const FockVector& v) { return rz.apply(g, v); };
    auto bracket = [&](Gen a, Gen b, const QScalar& r, const FockVector& v) {
        return ap(a, ap(b, v)) - r * ap(b, ap(a, v));
    };
    auto qbracket_h = [&](int i, const FockVector& v) {
        FockVector out;
        for (const auto& [m, c] : v.terms()) out.add(m, c * qint(rz.h_eigenvalue(i, m)));
        return out;
    };

    struct Rel {
        std::string name;
        std::function<FockVector(const FockVector&)> lhs, rhs;
    };
    std::vector<Rel> rels;
    const FockVector zerovec;

    const std::array<Gen, 3> diag = {Gen::E11, Gen::E22, Gen::E33};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            rels.push_back({std::string("[") + gen_name(diag[i]) + "," + gen_name(diag[j]) +
                                "] = 0",
                            [=](const FockVector& v) {
                                return bracket(diag[static_cast<std::size_t>(i)],
                                               diag[static_cast<std::size_t>(j)], QScalar::one(),
                                               v);
                            },
                            [=](const FockVector&) { return zerovec; }});
        }
    }
    struct RootPair {
        Gen e;
        std::array<int, 3> delta;  // coefficient of E_ii in [E_ii, e]
    };
    const std::vector<RootPair> roots = {{Gen::E12, {1, -1, 0}},
                                         {Gen::E21, {-1, 1, 0}},
                                         {Gen::E23, {0, 1, -1}},
                                         {Gen::E32, {0, -1, 1}}};
    for (const auto& rp : roots) {
        for (int i = 0; i < 3; ++i) {
            long coef = rp.delta[static_cast<std::size_t>(i)];
            rels.push_back({std::string("[") + gen_name(diag[static_cast<std::size_t>(i)]) + "," +
                                gen_name(rp.e) + "] = " + std::to_string(coef) + "*" +
                                gen_name(rp.e),
                            [=](const FockVector& v) {
                                return bracket(diag[static_cast<std::size_t>(i)], rp.e,
                                               QScalar::one(), v);
                            },
                            [=](const FockVector& v) { return QScalar(coef) * ap(rp.e, v); }});
        }
    }
    rels.push_back({"[E12,E21] = [H1]_q",
                    [=](const FockVector& v) { return bracket(Gen::E12, Gen::E21, QScalar::one(), v); },
                    [=](const FockVector& v) { return qbracket_h(1, v); }});
    rels.push_back({"{E23,E32} = [H2]_q",
                    [=](const FockVector& v) {
                        return ap(Gen::E23, ap(Gen::E32, v)) + ap(Gen::E32, ap(Gen::E23, v));
                    },
                    [=](const FockVector& v) { return qbracket_h(2, v); }});
    rels.push_back({"E23^2 = 0",
                    [=](const FockVector& v) { return ap(Gen::E23, ap(Gen::E23, v)); },
                    [=](const FockVector&) { return zerovec; }});
    rels.push_back({"E32^2 = 0",
                    [=](const FockVector& v) { return ap(Gen::E32, ap(Gen::E32, v)); },
                    [=](const FockVector&) { return zerovec; }});
    rels.push_back({"[E12,E13]_q = 0",
                    [=](const FockVector& v) { return bracket(Gen::E12, Gen::E13, q, v); },
                    [=](const FockVector&) { return zerovec; }});
    rels.push_back({"[E21,E31]_q = 0",
                    [=](const FockVector& v) { return bracket(Gen::E21, Gen::E31, q, v); },
                    [=](const FockVector&) { return zerovec; }});
    rels.push_back({"E13 = [E12,E23]_{q^-1}",
                    [=](const FockVector& v) { return ap(Gen::E13, v); },
                    [=](const FockVector& v) { return bracket(Gen::E12, Gen::E23, qinv, v); }});
    rels.push_back({"E31 = -[E21,E32]_{q^-1}",
                    [=](const FockVector& v) { return ap(Gen::E31, v); },
                    [=](const FockVector& v) {
                        return -bracket(Gen::E21, Gen::E32, qinv, v);
                    }});

    Report report;
    for (const auto& rel : rels) {
        CheckResult res;
        res.relation = rel.name;
        for (long n = 0; n <= nmax && res.passed; ++n) {
            for (int f13 = 0; f13 <= 1 && res.passed; ++f13) {
                for (int f23 = 0; f23 <= 1 && res.passed; ++f23) {
                    FockMonomial m{n, f13, f23};
                    FockVector v = FockVector::unit(m);
                    FockVector l = rel.lhs(v), r = rel.rhs(v);
                    if (!(l == r)) {
                        res.passed = false;
                        res.counterexample = m.str();
                        res.lhs = l.str();
                        res.rhs = r.str();
                    }
                }
            }
        }
        report.checks.push_back(std::move(res));
    }
    return report;
}

Report verify_fock_relations(const RealizationParams& p, long nmax) {
    Realization rz(p);
    return verify_fock_relations(rz, nmax);
}

}  // namespace uqgl21
