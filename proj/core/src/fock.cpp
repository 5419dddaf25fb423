#include "uqgl21/fock.hpp"

#include <sstream>

namespace uqgl21 {

std::string FockMonomial::str() const {
    std::ostringstream os;
    if (f23) os << "a23+ ";
    if (f13) os << "a13+ ";
    if (n == 1) os << "(a+) ";
    if (n > 1) os << "(a+)^" << n << " ";
    os << "|0>";
    return os.str();
}

QScalar FockVector::coeff(const FockMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QScalar::zero() : it->second;
}

void FockVector::add(const FockMonomial& m, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FockVector operator-(const FockVector& a) {
    FockVector r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

FockVector operator*(const QScalar& c, const FockVector& v) {
    FockVector r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : v.terms_) r.terms_.emplace(m, c * x);
    return r;
}

std::string FockVector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + " * " + m.str();
    }
    return out;
}

QScalar apply_op(LadderOp op, const FockMonomial& m, FockMonomial* out) {
    *out = m;
    switch (op) {
        case LadderOp::BosonCreate:
            out->n = m.n + 1;
            return QScalar::one();
        case LadderOp::BosonAnnihilate:
            if (m.n == 0) return QScalar::zero();
            out->n = m.n - 1;
            return qint(m.n);
        case LadderOp::NumBoson:
            return QScalar(m.n);
        case LadderOp::F13Create:
            if (m.f13) return QScalar::zero();
            out->f13 = 1;
            return m.f23 ? QScalar(-1) : QScalar::one();
        case LadderOp::F13Annihilate:
            if (!m.f13) return QScalar::zero();
            out->f13 = 0;
            return m.f23 ? QScalar(-1) : QScalar::one();
        case LadderOp::NumF13:
            return QScalar(m.f13);
        case LadderOp::F23Create:
            if (m.f23) return QScalar::zero();
            out->f23 = 1;
            return QScalar::one();
        case LadderOp::F23Annihilate:
            if (!m.f23) return QScalar::zero();
            out->f23 = 0;
            return QScalar::one();
        case LadderOp::NumF23:
            return QScalar(m.f23);
    }
    return QScalar::zero();
}

FockVector apply(LadderOp op, const FockVector& v) {
    FockVector r;
    FockMonomial out;
    for (const auto& [m, c] : v.terms()) {
        QScalar f = apply_op(op, m, &out);
        if (!f.is_zero()) r.add(out, c * f);
    }
    return r;
}

FockVector apply_q_power_fermion(bool mode13, const FockVector& v) {
    LadderOp num = mode13 ? LadderOp::NumF13 : LadderOp::NumF23;
    FockVector nv = apply(num, v);
    return v + (qpow(HalfInt::whole(1)) - QScalar::one()) * nv;
}

namespace {

FockVector default_apply(LadderOp op, const FockVector& v) { return apply(op, v); }

struct HXCheck {
    std::string name;
    // lhs/rhs as operator expressions applied to a single-monomial vector.
    std::function<FockVector(const FockApplier&, const FockVector&)> lhs, rhs;
};

}  // namespace

Report check_heisenberg(long nmax, const FockApplier& applier_in) {
    FockApplier ap = applier_in ? applier_in : default_apply;
    const QScalar q = qpow(HalfInt::whole(1));

    auto scale_qpow_negn = [](const FockVector& v) {
        FockVector r;
        for (const auto& [m, c] : v.terms()) r.add(m, c * qpow(HalfInt::whole(-m.n)));
        return r;
    };
    auto scale_qint_n = [](const FockVector& v, long shift) {
        FockVector r;
        for (const auto& [m, c] : v.terms()) r.add(m, c * qint(m.n + shift));
        return r;
    };

    std::vector<HXCheck> checks;
    checks.push_back({"a a+ - q a+ a = q^(-N)",
                      [&](const FockApplier& f, const FockVector& v) {
                          return f(LadderOp::BosonAnnihilate, f(LadderOp::BosonCreate, v)) -
                                 q * f(LadderOp::BosonCreate, f(LadderOp::BosonAnnihilate, v));
                      },
                      [&](const FockApplier&, const FockVector& v) { return scale_qpow_negn(v); }});
    checks.push_back({"a+ a = [N]_q",
                      [](const FockApplier& f, const FockVector& v) {
                          return f(LadderOp::BosonCreate, f(LadderOp::BosonAnnihilate, v));
                      },
                      [&](const FockApplier&, const FockVector& v) { return scale_qint_n(v, 0); }});
    checks.push_back({"a a+ = [N+1]_q",
                      [](const FockApplier& f, const FockVector& v) {
                          return f(LadderOp::BosonAnnihilate, f(LadderOp::BosonCreate, v));
                      },
                      [&](const FockApplier&, const FockVector& v) { return scale_qint_n(v, 1); }});
    checks.push_back({"[N, a+] = a+",
                      [](const FockApplier& f, const FockVector& v) {
                          return f(LadderOp::NumBoson, f(LadderOp::BosonCreate, v)) -
                                 f(LadderOp::BosonCreate, f(LadderOp::NumBoson, v));
                      },
                      [](const FockApplier& f, const FockVector& v) {
                          return f(LadderOp::BosonCreate, v);
                      }});
    checks.push_back({"[N, a] = -a",
                      [](const FockApplier& f, const FockVector& v) {
                          return f(LadderOp::NumBoson, f(LadderOp::BosonAnnihilate, v)) -
                                 f(LadderOp::BosonAnnihilate, f(LadderOp::NumBoson, v));
                      },
                      [](const FockApplier& f, const FockVector& v) {
                          return -f(LadderOp::BosonAnnihilate, v);
                      }});
    struct FPair {
        const char* tag;
        LadderOp create, annihilate, num;
    };
    for (FPair fp : {FPair{"13", LadderOp::F13Create, LadderOp::F13Annihilate, LadderOp::NumF13},
                     FPair{"23", LadderOp::F23Create, LadderOp::F23Annihilate, LadderOp::NumF23}}) {
        checks.push_back({std::string("{a") + fp.tag + ", a" + fp.tag + "+} = 1",
                          [fp](const FockApplier& f, const FockVector& v) {
                              return f(fp.annihilate, f(fp.create, v)) +
                                     f(fp.create, f(fp.annihilate, v));
                          },
                          [](const FockApplier&, const FockVector& v) { return v; }});
        checks.push_back({std::string("N") + fp.tag + " = a" + fp.tag + "+ a" + fp.tag,
                          [fp](const FockApplier& f, const FockVector& v) {
                              return f(fp.create, f(fp.annihilate, v));
                          },
                          [fp](const FockApplier& f, const FockVector& v) {
                              return f(fp.num, v);
                          }});
        checks.push_back({std::string("[N") + fp.tag + ", a" + fp.tag + "+] = a" + fp.tag + "+",
                          [fp](const FockApplier& f, const FockVector& v) {
                              return f(fp.num, f(fp.create, v)) - f(fp.create, f(fp.num, v));
                          },
                          [fp](const FockApplier& f, const FockVector& v) {
                              return f(fp.create, v);
                          }});
        checks.push_back({std::string("[N") + fp.tag + ", a" + fp.tag + "] = -a" + fp.tag,
                          [fp](const FockApplier& f, const FockVector& v) {
                              return f(fp.num, f(fp.annihilate, v)) -
                                     f(fp.annihilate, f(fp.num, v));
                          },
                          [fp](const FockApplier& f, const FockVector& v) {
                              return -f(fp.annihilate, v);
                          }});
    }

    Report report;
    for (const auto& chk : checks) {
        CheckResult res;
        res.relation = chk.name;
        for (long n = 0; n <= nmax && res.passed; ++n) {
            for (int f13 = 0; f13 <= 1 && res.passed; ++f13) {
                for (int f23 = 0; f23 <= 1 && res.passed; ++f23) {
                    FockMonomial m{n, f13, f23};
                    FockVector v = FockVector::unit(m);
                    FockVector l = chk.lhs(ap, v), r = chk.rhs(ap, v);
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

}  // namespace uqgl21
