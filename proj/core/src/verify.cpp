#include "uqgl21/verify.hpp"

#include "uqgl21/errors.hpp"

namespace uqgl21 {

namespace {

QMatrix qbracket_diag(const QMatrix& h) {
    std::vector<long> eigs;
    if (!h.integer_diagonal(&eigs))
        throw NonIntegerCartan("operator q-bracket needs a diagonal integer Cartan matrix");
    QMatrix out(h.rows(), h.cols());
    for (int i = 0; i < h.rows(); ++i) out.set(i, i, qint(eigs[static_cast<std::size_t>(i)]));
    return out;
}

void matrix_check(Report& report, const std::string& name, const QMatrix& lhs,
                  const QMatrix& rhs) {
    CheckResult res;
    res.relation = name;
    if (auto d = QMatrix::first_difference(lhs, rhs)) {
        res.passed = false;
        res.counterexample = "(" + std::to_string(d->first) + "," + std::to_string(d->second) + ")";
        res.lhs = lhs.at(d->first, d->second).str();
        res.rhs = rhs.at(d->first, d->second).str();
    }
    report.checks.push_back(std::move(res));
}

}  // namespace

Report check_defining_relations(const Representation& rep) {
    Report report;
    const auto& M = rep.matrices;
    auto comm = [](const QMatrix& a, const QMatrix& b) { return a * b - b * a; };

    const std::array<Gen, 3> diag = {Gen::E11, Gen::E22, Gen::E33};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            matrix_check(report,
                         std::string("[") + gen_name(diag[static_cast<std::size_t>(i)]) + "," +
                             gen_name(diag[static_cast<std::size_t>(j)]) + "] = 0",
                         comm(M.at(diag[static_cast<std::size_t>(i)]),
                              M.at(diag[static_cast<std::size_t>(j)])),
                         QMatrix(rep.dim(), rep.dim()));
        }
    }
    struct RootPair {
        Gen e;
        std::array<long, 3> delta;
    };
    const std::vector<RootPair> roots = {{Gen::E12, {1, -1, 0}},
                                         {Gen::E21, {-1, 1, 0}},
                                         {Gen::E23, {0, 1, -1}},
                                         {Gen::E32, {0, -1, 1}}};
    for (const auto& rp : roots) {
        for (int i = 0; i < 3; ++i) {
            long c = rp.delta[static_cast<std::size_t>(i)];
            matrix_check(report,
                         std::string("[") + gen_name(diag[static_cast<std::size_t>(i)]) + "," +
                             gen_name(rp.e) + "] = " + std::to_string(c) + "*" + gen_name(rp.e),
                         comm(M.at(diag[static_cast<std::size_t>(i)]), M.at(rp.e)),
                         QScalar(c) * M.at(rp.e));
        }
    }
    // H1 = E11 - E22, H2 = E22 + E33.
    QMatrix h1 = M.at(Gen::E11) - M.at(Gen::E22);
    QMatrix h2 = M.at(Gen::E22) + M.at(Gen::E33);
    matrix_check(report, "[E12,E21] = [H1]_q", comm(M.at(Gen::E12), M.at(Gen::E21)),
                 qbracket_diag(h1));
    matrix_check(report, "{E23,E32} = [H2]_q",
                 M.at(Gen::E23) * M.at(Gen::E32) + M.at(Gen::E32) * M.at(Gen::E23),
                 qbracket_diag(h2));
    return report;
}

Report check_serre(const Representation& rep) {
    Report report;
    const auto& M = rep.matrices;
    const QScalar q = qpow(HalfInt::whole(1)), qinv = qpow(HalfInt::whole(-1));
    const QMatrix zero(rep.dim(), rep.dim());
    auto qbr = [](const QMatrix& a, const QMatrix& b, const QScalar& r) {
        return a * b - r * (b * a);
    };

    matrix_check(report, "E23^2 = 0", M.at(Gen::E23) * M.at(Gen::E23), zero);
    matrix_check(report, "E32^2 = 0", M.at(Gen::E32) * M.at(Gen::E32), zero);
    matrix_check(report, "[E12,E13]_q = 0", qbr(M.at(Gen::E12), M.at(Gen::E13), q), zero);
    matrix_check(report, "[E21,E31]_q = 0", qbr(M.at(Gen::E21), M.at(Gen::E31), q), zero);
    matrix_check(report, "E13 = [E12,E23]_{q^-1}", M.at(Gen::E13),
                 qbr(M.at(Gen::E12), M.at(Gen::E23), qinv));
    matrix_check(report, "E31 = -[E21,E32]_{q^-1}", M.at(Gen::E31),
                 -qbr(M.at(Gen::E21), M.at(Gen::E32), qinv));
    return report;
}

Report run_matrix_suite(const Representation& rep) {
    Report r = check_defining_relations(rep);
    r.merge(check_serre(rep));
    return r;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    RationalMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (!(y.at(k, j) == 0)) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y) {
    RationalMatrix r = x;
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) += y.at(i, j);
    return r;
}

RationalMatrix operator-(const RationalMatrix& x, const RationalMatrix& y) {
    RationalMatrix r = x;
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) -= y.at(i, j);
    return r;
}

std::map<Gen, RationalMatrix> evaluate_at_z(const Representation& rep, const mpq_class& z0) {
    std::map<Gen, RationalMatrix> out;
    for (const auto& [g, m] : rep.matrices) {
        RationalMatrix rm(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (const auto& [j, v] : m.row(i)) rm.at(i, j) = v.eval_z(z0);
        out.emplace(g, std::move(rm));
    }
    return out;
}

namespace {

void rat_check(Report& report, const std::string& name, const RationalMatrix& lhs,
               const RationalMatrix& rhs) {
    CheckResult res;
    res.relation = name;
    if (!(lhs == rhs)) {
        for (int i = 0; i < lhs.rows && res.passed; ++i) {
            for (int j = 0; j < lhs.cols; ++j) {
                if (!(lhs.at(i, j) == rhs.at(i, j))) {
                    res.passed = false;
                    res.counterexample =
                        "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    res.lhs = lhs.at(i, j).get_str();
                    res.rhs = rhs.at(i, j).get_str();
                    break;
                }
            }
        }
    }
    report.checks.push_back(std::move(res));
}

mpq_class qnum_at(long x, const mpq_class& q0) {
    if (q0 == 1) return mpq_class(x);
    mpq_class qx(1), s = q0;
    long ax = x < 0 ? -x : x;
    for (long i = 0; i < ax; ++i) qx *= s;
    if (x < 0) qx = 1 / qx;
    return (qx - 1 / qx) / (q0 - 1 / q0);
}

}  // namespace

Report check_relations_at(const std::map<Gen, RationalMatrix>& mats, const mpq_class& z0) {
    Report report;
    const mpq_class q0 = z0 * z0;
    const int d = mats.at(Gen::H1).rows;
    auto comm = [](const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; };
    auto scaled = [](const mpq_class& s, RationalMatrix m) {
        for (auto& row : m.a)
            for (auto& v : row) v *= s;
        return m;
    };
    const RationalMatrix zero(d, d);

    const std::array<Gen, 3> diag = {Gen::E11, Gen::E22, Gen::E33};
    const std::vector<std::pair<Gen, std::array<long, 3>>> roots = {
        {Gen::E12, {1, -1, 0}},
        {Gen::E21, {-1, 1, 0}},
        {Gen::E23, {0, 1, -1}},
        {Gen::E32, {0, -1, 1}}};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            rat_check(report,
                      std::string("[") + gen_name(diag[static_cast<std::size_t>(i)]) + "," +
                          gen_name(diag[static_cast<std::size_t>(j)]) + "] = 0",
                      comm(mats.at(diag[static_cast<std::size_t>(i)]),
                           mats.at(diag[static_cast<std::size_t>(j)])),
                      zero);
    for (const auto& [e, delta] : roots)
        for (int i = 0; i < 3; ++i)
            rat_check(report,
                      std::string("[") + gen_name(diag[static_cast<std::size_t>(i)]) + "," +
                          gen_name(e) + "] = " + std::to_string(delta[static_cast<std::size_t>(i)]) +
                          "*" + gen_name(e),
                      comm(mats.at(diag[static_cast<std::size_t>(i)]), mats.at(e)),
                      scaled(mpq_class(delta[static_cast<std::size_t>(i)]), mats.at(e)));

    // Cartan q-brackets from the (diagonal, integer) H matrices.
    RationalMatrix h1 = mats.at(Gen::E11) - mats.at(Gen::E22);
    RationalMatrix h2 = mats.at(Gen::E22) + mats.at(Gen::E33);
    RationalMatrix h1q(d, d), h2q(d, d);
    for (int i = 0; i < d; ++i) {
        mpq_class e1 = h1.at(i, i), e2 = h2.at(i, i);
        if (e1.get_den() != 1 || e2.get_den() != 1)
            throw NonIntegerCartan("non-integer Cartan eigenvalue at numeric q");
        h1q.at(i, i) = qnum_at(e1.get_num().get_si(), q0);
        h2q.at(i, i) = qnum_at(e2.get_num().get_si(), q0);
    }
    rat_check(report, "[E12,E21] = [H1]_q", comm(mats.at(Gen::E12), mats.at(Gen::E21)), h1q);
    rat_check(report, "{E23,E32} = [H2]_q",
              mats.at(Gen::E23) * mats.at(Gen::E32) + mats.at(Gen::E32) * mats.at(Gen::E23), h2q);

    rat_check(report, "E23^2 = 0", mats.at(Gen::E23) * mats.at(Gen::E23), zero);
    rat_check(report, "E32^2 = 0", mats.at(Gen::E32) * mats.at(Gen::E32), zero);
    auto qbr = [&](Gen a, Gen b, const mpq_class& r) {
        return mats.at(a) * mats.at(b) - scaled(r, mats.at(b) * mats.at(a));
    };
    rat_check(report, "[E12,E13]_q = 0", qbr(Gen::E12, Gen::E13, q0), zero);
    rat_check(report, "[E21,E31]_q = 0", qbr(Gen::E21, Gen::E31, q0), zero);
    rat_check(report, "E13 = [E12,E23]_{q^-1}", mats.at(Gen::E13), qbr(Gen::E12, Gen::E23, 1 / q0));
    rat_check(report, "E31 = -[E21,E32]_{q^-1}", mats.at(Gen::E31),
              scaled(-1, qbr(Gen::E21, Gen::E32, 1 / q0)));
    return report;
}

Report classical_limit_check(const Representation& rep) {
    auto mats = evaluate_at_z(rep, mpq_class(1));
    Report report;
    const int d = rep.dim();
    const RationalMatrix zero(d, d);

    struct Unit {
        int i, j;
        Gen g;
    };
    const std::vector<Unit> units = {{1, 1, Gen::E11}, {2, 2, Gen::E22}, {3, 3, Gen::E33},
                                     {1, 2, Gen::E12}, {2, 1, Gen::E21}, {2, 3, Gen::E23},
                                     {3, 2, Gen::E32}, {1, 3, Gen::E13}, {3, 1, Gen::E31}};
    auto parity = [](int i) { return i == 3 ? 1 : 0; };
    auto unit_mat = [&](int i, int j) -> const RationalMatrix* {
        for (const auto& u : units)
            if (u.i == i && u.j == j) return &mats.at(u.g);
        return nullptr;
    };

    for (const auto& x : units) {
        for (const auto& y : units) {
            int px = (parity(x.i) + parity(x.j)) % 2;
            int py = (parity(y.i) + parity(y.j)) % 2;
            int sign = (px && py) ? -1 : 1;
            // [x, y} = x y - (-1)^(px py) y x.
            RationalMatrix xy = mats.at(x.g) * mats.at(y.g);
            RationalMatrix yx = mats.at(y.g) * mats.at(x.g);
            RationalMatrix lhs = sign < 0 ? xy + yx : xy - yx;
            RationalMatrix rhs = zero;
            if (x.j == y.i) rhs = rhs + *unit_mat(x.i, y.j);
            if (x.i == y.j) {
                RationalMatrix t = *unit_mat(y.i, x.j);
                int s2 = (px && py) ? -1 : 1;
                for (auto& row : t.a)
                    for (auto& v : row) v *= -s2;
                rhs = rhs + t;
            }
            rat_check(report,
                      std::string("[e") + std::to_string(x.i) + std::to_string(x.j) + ",e" +
                          std::to_string(y.i) + std::to_string(y.j) + "} at q=1",
                      lhs, rhs);
        }
    }
    return report;
}

}  // namespace uqgl21
