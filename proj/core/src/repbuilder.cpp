#include "uqgl21/repbuilder.hpp"

#include <algorithm>

#include "uqgl21/errors.hpp"

namespace uqgl21 {

std::string BasisLabel::str() const {
    return "V" + std::to_string(tower) + "(" + proj.str() + ")";
}

std::array<long, 4> tower_sizes(HalfInt j1) {
    long t1 = j1.twice();
    return {t1 + 1, t1, t1 + 2, t1 + 1};
}

HalfInt tower_l1(HalfInt j1, int tower) {
    switch (tower) {
        case 1: return j1;
        case 2: return HalfInt(j1.twice() - 1);
        case 3: return HalfInt(j1.twice() + 1);
        case 4: return j1;
    }
    throw Error("tower_l1: bad tower");
}

int Representation::index_of(const BasisLabel& l) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].first == l) return static_cast<int>(i);
    return -1;
}

std::vector<std::pair<BasisLabel, FockVector>> build_basis(const RealizationParams& p) {
    const long t1 = p.j1.twice();
    if (t1 < 0) throw Error("build_basis: 2*j1 must be a nonnegative integer");
    const CoeffFamily& F = p.coeffs;
    const QScalar two(2);
    const QScalar q2j1p1 = qint(t1 + 1);               // [2J1+1]_q
    const QScalar qm = qpow(HalfInt::whole(-t1 - 1));  // q^(-2J1-1)

    std::vector<std::pair<BasisLabel, FockVector>> basis;

    // V1: (a+)^(J1-M) |0>.
    for (long mt = t1; mt >= -t1; mt -= 2) {
        long k = (t1 - mt) / 2;
        basis.emplace_back(BasisLabel{1, HalfInt(mt)}, FockVector::unit({k, 0, 0}));
    }
    // V2: 2 F2(k+1) a23+ (a+)^(k+1) |0> + 2 F3(k) a13+ (a+)^k |0>, k = J1-P-1/2.
    for (long pt = t1 - 1; pt >= -(t1 - 1); pt -= 2) {
        long k = (t1 - pt - 1) / 2;
        FockVector v;
        v.add({k + 1, 0, 1}, two * F[2].eval(k + 1));
        v.add({k, 1, 0}, two * F[3].eval(k));
        if (v.is_zero()) throw Error("build_basis: V2 vector vanished for this family");
        basis.emplace_back(BasisLabel{2, HalfInt(pt)}, std::move(v));
    }
    // V3, r = J1-R+1/2:
    //   2 { F1(r) [2J1+1] - F2(r) [r] q^(-2J1-1) } a23+ (a+)^r |0>
    //   - 2 F3(r-1) [r] q^(-2J1-1) a13+ (a+)^(r-1) |0>,
    // with the [r] = 0 top short-circuiting the F2/F3 factors.
    for (long rt = t1 + 1; rt >= -(t1 + 1); rt -= 2) {
        long r = (t1 - rt + 1) / 2;
        QScalar br = qint(r);
        FockVector v;
        QScalar coef_a = two * F[1].eval(r) * q2j1p1;
        if (!br.is_zero()) coef_a -= two * F[2].eval(r) * br * qm;
        v.add({r, 0, 1}, coef_a);
        if (!br.is_zero()) v.add({r - 1, 1, 0}, -(two * F[3].eval(r - 1) * br * qm));
        if (v.is_zero()) throw Error("build_basis: V3 vector vanished for this family");
        basis.emplace_back(BasisLabel{3, HalfInt(rt)}, std::move(v));
    }
    // V4: a23+ a13+ (a+)^(J1-S) |0>.
    for (long st = t1; st >= -t1; st -= 2) {
        long m = (t1 - st) / 2;
        basis.emplace_back(BasisLabel{4, HalfInt(st)}, FockVector::unit({m, 1, 1}));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Exact expansion of images in the basis.

namespace {

class ExactSolver {
  public:
    ExactSolver(std::vector<std::vector<QScalar>> columns, int nrows)
        : m_(nrows), d_(static_cast<int>(columns.size())) {
        // Row-major working matrix.
        a_.assign(static_cast<std::size_t>(m_),
                  std::vector<QScalar>(static_cast<std::size_t>(d_), QScalar::zero()));
        for (int j = 0; j < d_; ++j)
            for (int i = 0; i < m_; ++i)
                a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        for (int k = 0; k < d_; ++k) {
            int piv = -1;
            for (int i = k; i < m_; ++i) {
                if (!a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) {
                    piv = i;
                    break;
                }
            }
            if (piv < 0) throw ExpansionFailure("basis vectors are linearly dependent");
            if (piv != k) {
                std::swap(a_[static_cast<std::size_t>(piv)], a_[static_cast<std::size_t>(k)]);
                ops_.push_back({true, piv, k, QScalar::zero()});
            }
            for (int i = k + 1; i < m_; ++i) {
                QScalar& lead = a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (lead.is_zero()) continue;
                QScalar f = lead / a_[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
                for (int j = k; j < d_; ++j)
                    a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        f * a_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                ops_.push_back({false, i, k, std::move(f)});
            }
        }
    }

    std::vector<QScalar> solve(std::vector<QScalar> y, const std::string& what) const {
        for (const auto& op : ops_) {
            if (op.swap)
                std::swap(y[static_cast<std::size_t>(op.i)], y[static_cast<std::size_t>(op.j)]);
            else
                y[static_cast<std::size_t>(op.i)] -= op.f * y[static_cast<std::size_t>(op.j)];
        }
        for (int i = d_; i < m_; ++i)
            if (!y[static_cast<std::size_t>(i)].is_zero())
                throw ExpansionFailure("image not in basis span: " + what);
        std::vector<QScalar> x(static_cast<std::size_t>(d_), QScalar::zero());
        for (int k = d_ - 1; k >= 0; --k) {
            QScalar acc = y[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < d_; ++j)
                acc -= a_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] *
                       x[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(k)] =
                acc / a_[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        }
        return x;
    }

  private:
    struct RowOp {
        bool swap;
        int i, j;
        QScalar f;
    };
    int m_, d_;
    std::vector<std::vector<QScalar>> a_;
    std::vector<RowOp> ops_;
};

}  // namespace

Representation build_rep(const RealizationParams& p) {
    Representation rep;
    rep.params = p;
    rep.basis = build_basis(p);
    const int d = rep.dim();

    std::map<FockMonomial, int> row_of;
    for (const auto& [label, vec] : rep.basis)
        for (const auto& [m, c] : vec.terms())
            row_of.try_emplace(m, static_cast<int>(row_of.size()));
    const int nrows = static_cast<int>(row_of.size());

    std::vector<std::vector<QScalar>> cols(
        static_cast<std::size_t>(d),
        std::vector<QScalar>(static_cast<std::size_t>(nrows), QScalar::zero()));
    for (int j = 0; j < d; ++j)
        for (const auto& [m, c] : rep.basis[static_cast<std::size_t>(j)].second.terms())
            cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(row_of.at(m))] = c;
    ExactSolver solver(std::move(cols), nrows);

    Realization rz(p);
    for (Gen g : kAllGens) {
        QMatrix mat(d, d);
        for (int j = 0; j < d; ++j) {
            FockVector img = rz.apply(g, rep.basis[static_cast<std::size_t>(j)].second);
            std::vector<QScalar> y(static_cast<std::size_t>(nrows), QScalar::zero());
            for (const auto& [m, c] : img.terms()) {
                auto it = row_of.find(m);
                if (it == row_of.end())
                    throw ExpansionFailure("image of " +
                                           rep.basis[static_cast<std::size_t>(j)].first.str() +
                                           " under " + gen_name(g) +
                                           " contains out-of-module monomial " + m.str());
                y[static_cast<std::size_t>(it->second)] = c;
            }
            std::vector<QScalar> x = solver.solve(
                std::move(y),
                std::string(gen_name(g)) + " " + rep.basis[static_cast<std::size_t>(j)].first.str());
            for (int i = 0; i < d; ++i)
                mat.set(i, j, x[static_cast<std::size_t>(i)]);
        }
        rep.matrices.emplace(g, std::move(mat));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Closed-form matrix elements.

Representation closed_form_rep(const RealizationParams& p) {
    Representation rep;
    rep.params = p;
    rep.basis = build_basis(p);
    const int d = rep.dim();
    const long t1 = p.j1.twice(), t2 = p.j2.twice(), t3 = p.j3.twice();
    const CoeffFamily& F = p.coeffs;

    std::map<std::pair<int, long>, int> idx;
    for (int i = 0; i < d; ++i) {
        const BasisLabel& l = rep.basis[static_cast<std::size_t>(i)].first;
        idx[{l.tower, l.proj.twice()}] = i;
    }
    auto lookup = [&idx](int tower, long projtwice) -> int {
        auto it = idx.find({tower, projtwice});
        return it == idx.end() ? -1 : it->second;
    };

    for (Gen g : kAllGens) rep.matrices.emplace(g, QMatrix(d, d));
    auto put = [&](Gen g, int tower, long projtwice, int col, const QScalar& v) {
        if (v.is_zero()) return;
        int row = lookup(tower, projtwice);
        if (row < 0)
            throw Error(std::string("closed_form_rep: nonzero ") + gen_name(g) +
                        " entry targets missing label V" + std::to_string(tower));
        rep.matrices.at(g).set(row, col, v);
    };

    const QScalar two(2), half(mpq_class(1, 2));
    const QScalar br2j1p1 = qint(t1 + 1);        // [2J1+1]
    const QScalar brt = qint(t1 + t2 + 1);       // [2J1+2J2+1]
    const QScalar br2j2 = qint(t2);              // [2J2]
    const QScalar qinv = qpow(HalfInt::whole(-1));

    for (int col = 0; col < d; ++col) {
        const BasisLabel& l = rep.basis[static_cast<std::size_t>(col)].first;
        const long w = l.proj.twice();
        // Diagonal actions.
        long h1 = w;
        long h2 = 0, h3 = 0;
        switch (l.tower) {
            case 1:
                h2 = t2 + (t1 - w) / 2;
                h3 = t3;
                break;
            case 2:
                h2 = t2 + (t1 - w + 1) / 2;
                h3 = t3 + 1;
                break;
            case 3:
                h2 = t2 + (t1 - w + 1) / 2;
                h3 = t3 + 1;
                break;
            case 4:
                h2 = t2 + (t1 - w) / 2 + 1;
                h3 = t3 + 2;
                break;
        }
        put(Gen::H1, l.tower, w, col, QScalar(h1));
        put(Gen::H2, l.tower, w, col, QScalar(h2));
        put(Gen::H3, l.tower, w, col, QScalar(h3));
        put(Gen::E11, l.tower, w, col, QScalar(h1 + h2 - h3));
        put(Gen::E22, l.tower, w, col, QScalar(h2 - h3));
        put(Gen::E33, l.tower, w, col, QScalar(h3));

        switch (l.tower) {
            case 1: {
                const long m = (t1 - w) / 2;  // J1 - M
                put(Gen::E12, 1, w + 2, col, qint(m));
                put(Gen::E21, 1, w - 2, col, qint((t1 + w) / 2));
                // E13, E23 annihilate V1.
                {  // E31.
                    QScalar c2 = brt * qint((t1 + w) / 2) * qpow(HalfInt(-(t1 - w) - 2)) * half /
                                 br2j1p1;
                    put(Gen::E31, 2, w - 1, col, c2);
                    QScalar c3 = -(br2j2 * qpow(HalfInt(t1 + w)) * half / br2j1p1);
                    put(Gen::E31, 3, w - 1, col, c3);
                }
                {  // E32.
                    QScalar c2 = qint(m) * brt * half / br2j1p1;
                    put(Gen::E32, 2, w + 1, col, c2);
                    QScalar c3 = br2j2 * half / br2j1p1;
                    put(Gen::E32, 3, w + 1, col, c3);
                }
                break;
            }
            case 2: {
                const long k = (t1 - w - 1) / 2;  // J1 - P - 1/2
                put(Gen::E12, 2, w + 2, col, qint(k));
                put(Gen::E21, 2, w - 2, col, qint((t1 + w - 1) / 2));
                put(Gen::E13, 1, w + 1, col, two * qpow(HalfInt(t1 - w - 1)));
                put(Gen::E23, 1, w - 1, col, two);
                // E31 -> V4(P-1/2), coefficient function argument J1-P+1/2.
                put(Gen::E31, 4, w - 1, col,
                    -(two * qpow(HalfInt(t1 + w - 3)) * br2j2 * F[4].eval(k + 1)));
                // E32 -> V4(P+1/2).
                put(Gen::E32, 4, w + 1, col, two * qinv * br2j2 * F[4].eval(k));
                break;
            }
            case 3: {
                const long r = (t1 - w + 1) / 2;  // J1 - R + 1/2
                put(Gen::E12, 3, w + 2, col, qint(r));
                put(Gen::E21, 3, w - 2, col, qint((t1 + w + 1) / 2));
                put(Gen::E13, 1, w + 1, col,
                    -(two * qpow(HalfInt(-t1 - w - 3)) * qint(r)));
                put(Gen::E23, 1, w - 1, col, two * qint((t1 + w + 1) / 2));
                {  // E31 -> V4(R-1/2), coefficient argument J1-R+1/2.
                    QScalar br = qint((t1 + w + 1) / 2);
                    if (!br.is_zero())
                        put(Gen::E31, 4, w - 1, col,
                            -(two * qpow(HalfInt(-t1 + w - 5)) * brt * br * F[4].eval(r)));
                }
                {  // E32 -> V4(R+1/2), coefficient argument J1-R-1/2.
                    QScalar br = qint(r);
                    if (!br.is_zero())
                        put(Gen::E32, 4, w + 1, col,
                            -(two * qinv * br * brt * F[4].eval(r - 1)));
                }
                break;
            }
            case 4: {
                const long m = (t1 - w) / 2;  // J1 - S
                {  // E12 within V4 carries the coefficient-function ratio.
                    QScalar br = qint(m);
                    if (!br.is_zero())
                        put(Gen::E12, 4, w + 2, col, br * F[4].eval(m - 1) / F[4].eval(m));
                }
                {  // E21 likewise.
                    QScalar br = qint((t1 + w) / 2);
                    if (!br.is_zero())
                        put(Gen::E21, 4, w - 2, col, br * F[4].eval(m + 1) / F[4].eval(m));
                }
                const QScalar f4 = F[4].eval(m);
                const QScalar qq = qpow(HalfInt::whole(1));
                {  // E13 (one power of q above the naive reading).
                    QScalar br = qint(m);
                    if (!br.is_zero())
                        put(Gen::E13, 2, w + 1, col,
                            -(qq * br * qpow(HalfInt(-t1 - w - 2)) * half / (f4 * br2j1p1)));
                    put(Gen::E13, 3, w + 1, col,
                        -(qq * qpow(HalfInt(t1 - w)) * half / (f4 * br2j1p1)));
                }
                {  // E23 (one power of q above the naive reading).
                    QScalar br = qint((t1 + w) / 2);
                    if (!br.is_zero())
                        put(Gen::E23, 2, w - 1, col, qq * br * half / (f4 * br2j1p1));
                    put(Gen::E23, 3, w - 1, col, -(qq * half / (f4 * br2j1p1)));
                }
                // E31, E32 annihilate V4.
                break;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Lowering structure.

Report lowering_check(const Representation& rep) {
    Report report;
    const QMatrix& e21 = rep.matrix(Gen::E21);
    const QMatrix& e12 = rep.matrix(Gen::E12);
    const int d = rep.dim();
    const auto sizes = tower_sizes(rep.params.j1);

    // Tower-major layout offsets.
    std::array<int, 4> offset{};
    {
        int acc = 0;
        for (int t = 0; t < 4; ++t) {
            offset[static_cast<std::size_t>(t)] = acc;
            acc += static_cast<int>(sizes[static_cast<std::size_t>(t)]);
        }
    }

    for (int t = 1; t <= 4; ++t) {
        const long size = sizes[static_cast<std::size_t>(t - 1)];
        if (size == 0) continue;
        const int top = offset[static_cast<std::size_t>(t - 1)];
        const HalfInt l1 = tower_l1(rep.params.j1, t);

        CheckResult res;
        res.relation = "E21 powers span tower V" + std::to_string(t) +
                       " with predicted q-number scalars";
        std::vector<QScalar> vec(static_cast<std::size_t>(d), QScalar::zero());
        vec[static_cast<std::size_t>(top)] = QScalar::one();
        QScalar scalar = QScalar::one();
        // The V4 line of E21 carries the fourth coefficient-function ratio,
        // which telescopes to F4(k)/F4(0) after k lowering steps.
        const QScalar f4_0 =
            (t == 4) ? rep.params.coeffs[4].eval(0) : QScalar::one();
        for (long k = 1; k < size && res.passed; ++k) {
            vec = e21.apply(vec);
            scalar = QScalar::one();
            for (long mstep = 1; mstep <= k; ++mstep)
                scalar *= qint(l1.twice() - mstep + 1);  // [2*L1 - m + 1]_q
            if (t == 4) scalar *= rep.params.coeffs[4].eval(k) / f4_0;

            for (int i = 0; i < d && res.passed; ++i) {
                QScalar expect =
                    (i == top + k) ? scalar : QScalar::zero();
                if (!(vec[static_cast<std::size_t>(i)] == expect)) {
                    res.passed = false;
                    res.counterexample =
                        rep.basis[static_cast<std::size_t>(top)].first.str() + " step " +
                        std::to_string(k);
                    res.lhs = vec[static_cast<std::size_t>(i)].str();
                    res.rhs = expect.str();
                }
            }
        }
        report.checks.push_back(std::move(res));

        CheckResult bot;
        bot.relation = "E21 annihilates the bottom of tower V" + std::to_string(t);
        const int bottom = top + static_cast<int>(size) - 1;
        for (int i = 0; i < d && bot.passed; ++i) {
            if (!e21.at(i, bottom).is_zero()) {
                bot.passed = false;
                bot.counterexample = rep.basis[static_cast<std::size_t>(bottom)].first.str();
                bot.lhs = e21.at(i, bottom).str();
                bot.rhs = QScalar::zero().str();
            }
        }
        report.checks.push_back(std::move(bot));
    }

    auto tower_of = [&](int i) {
        for (int t = 3; t >= 0; --t)
            if (i >= offset[static_cast<std::size_t>(t)]) return t + 1;
        return 1;
    };
    CheckResult cross;
    cross.relation = "E12/E21 have no cross-tower entries";
    for (const QMatrix* m : {&e12, &e21}) {
        for (int i = 0; i < d && cross.passed; ++i) {
            for (const auto& [j, v] : m->row(i)) {
                if (tower_of(i) != tower_of(j)) {
                    cross.passed = false;
                    cross.counterexample = "entry (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")";
                    cross.lhs = v.str();
                    cross.rhs = QScalar::zero().str();
                    break;
                }
            }
        }
    }
    report.checks.push_back(std::move(cross));
    return report;
}

}  // namespace uqgl21
