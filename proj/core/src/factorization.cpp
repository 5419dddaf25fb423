#include "uqgl21/factorization.hpp"

#include "uqgl21/errors.hpp"

namespace uqgl21 {

namespace {

// Joint state on (module coordinate) x (Fock monomial).
using Joint = std::map<std::pair<FockMonomial, int>, QScalar>;

void joint_add(Joint& j, const FockMonomial& f, int i, const QScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(f, i);
    auto [it, inserted] = j.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) j.erase(it);
    }
}

struct JointSpace {
    const Representation& rep;
    std::vector<int> parity;  // module basis parity (V2, V3 odd)

    explicit JointSpace(const Representation& r) : rep(r) {
        parity.reserve(r.basis.size());
        for (const auto& [label, vec] : r.basis)
            parity.push_back(label.tower == 2 || label.tower == 3 ? 1 : 0);
    }

    Joint apply_module(Gen g, const Joint& v) const {
        const QMatrix& m = rep.matrix(g);
        Joint out;
        for (const auto& [key, c] : v) {
            for (int i = 0; i < m.rows(); ++i) {
                QScalar e = m.at(i, key.second);
                if (!e.is_zero()) joint_add(out, key.first, i, c * e);
            }
        }
        return out;
    }

    // Fock operator acting across the module factor; odd operators pick up
    // (-1)^(parity of the module coordinate).
    Joint apply_fock(LadderOp op, bool odd, const Joint& v) const {
        Joint out;
        FockMonomial im;
        for (const auto& [key, c] : v) {
            QScalar f = apply_op(op, key.first, &im);
            if (f.is_zero()) continue;
            QScalar coef = c * f;
            if (odd && parity[static_cast<std::size_t>(key.second)]) coef = -coef;
            joint_add(out, im, key.second, coef);
        }
        return out;
    }

    // Multiply by a function of the boson occupation.
    Joint scale_coeff(const CoeffFn& fn, const Joint& v) const {
        Joint out;
        for (const auto& [key, c] : v) joint_add(out, key.first, key.second, c * fn.eval(key.first.n));
        return out;
    }
};

// One application of X = a+ E12 + a23+ E23 + a13+ E13.
Joint apply_x(const JointSpace& js, const Joint& v) {
    Joint out = js.apply_fock(LadderOp::BosonCreate, false, js.apply_module(Gen::E12, v));
    for (auto& [k, c] : js.apply_fock(LadderOp::F23Create, true, js.apply_module(Gen::E23, v)))
        joint_add(out, k.first, k.second, c);
    for (auto& [k, c] : js.apply_fock(LadderOp::F13Create, true, js.apply_module(Gen::E13, v)))
        joint_add(out, k.first, k.second, c);
    return out;
}

// e_q^X v (terminates by nilpotency of the raising action on the module).
Joint q_exp_x(const JointSpace& js, Joint v) {
    Joint acc = v;
    Joint term = std::move(v);
    for (long k = 1; !term.empty(); ++k) {
        term = apply_x(js, term);
        if (term.empty()) break;
        QScalar inv = qint(k).inverse();
        for (auto& [key, c] : term) c *= inv;
        for (const auto& [key, c] : term) joint_add(acc, key.first, key.second, c);
        if (k > 4 * js.rep.dim()) throw Error("q_exp_x: series failed to terminate");
    }
    return acc;
}

// e_q^(a+ E12) v.
Joint q_exp_boson(const JointSpace& js, Joint v) {
    Joint acc = v;
    Joint term = std::move(v);
    for (long k = 1; !term.empty(); ++k) {
        term = js.apply_fock(LadderOp::BosonCreate, false, js.apply_module(Gen::E12, term));
        if (term.empty()) break;
        QScalar inv = qint(k).inverse();
        for (auto& [key, c] : term) c *= inv;
        for (const auto& [key, c] : term) joint_add(acc, key.first, key.second, c);
        if (k > 4 * js.rep.dim()) throw Error("q_exp_boson: series failed to terminate");
    }
    return acc;
}

FockVector project_hw(const Joint& v) {
    FockVector out;
    for (const auto& [key, c] : v)
        if (key.second == 0) out.add(key.first, c);
    return out;
}

}  // namespace

FockVector cs_map(const Representation& rep, const std::vector<QScalar>& psi) {
    if (psi.size() != rep.basis.size()) throw Error("cs_map: coordinate size mismatch");
    JointSpace js(rep);
    Joint v;
    for (std::size_t i = 0; i < psi.size(); ++i)
        joint_add(v, FockMonomial{0, 0, 0}, static_cast<int>(i), psi[i]);
    return project_hw(q_exp_x(js, std::move(v)));
}

Report factorization_check(const RealizationParams& p, const Representation& rep) {
    return factorization_check(p, rep, p.coeffs);
}

Report factorization_check(const RealizationParams& /*p*/, const Representation& rep,
                           const CoeffFamily& rhs_family) {
    JointSpace js(rep);
    const CoeffFn &F1 = rhs_family[1], &F2 = rhs_family[2], &F3 = rhs_family[3],
                  &F4 = rhs_family[4];

    Report report;
    for (int j = 0; j < rep.dim(); ++j) {
        Joint start;
        joint_add(start, FockMonomial{0, 0, 0}, j, QScalar::one());

        FockVector lhs = project_hw(q_exp_x(js, start));

        // Factored side: apply e_q^(a+ E12), then
        //   1 + F1 a23+E23 + F2 a+ a23+E13 + F3 a13+E13 + F4 a13+E13 a23+E23
        // (the cross term of the two inner exponentials dies on a23+ a23+).
        Joint base = q_exp_boson(js, start);
        Joint rhs_joint = base;

        Joint t1 = js.scale_coeff(
            F1, js.apply_fock(LadderOp::F23Create, true, js.apply_module(Gen::E23, base)));
        for (const auto& [k, c] : t1) joint_add(rhs_joint, k.first, k.second, c);

        Joint t2 = js.scale_coeff(
            F2, js.apply_fock(LadderOp::BosonCreate, false,
                              js.apply_fock(LadderOp::F23Create, true,
                                            js.apply_module(Gen::E13, base))));
        for (const auto& [k, c] : t2) joint_add(rhs_joint, k.first, k.second, c);

        Joint e13part = js.apply_fock(LadderOp::F13Create, true, js.apply_module(Gen::E13, base));
        Joint t3 = js.scale_coeff(F3, e13part);
        for (const auto& [k, c] : t3) joint_add(rhs_joint, k.first, k.second, c);

        Joint t4 = js.scale_coeff(
            F4, js.apply_fock(LadderOp::F13Create, true,
                              js.apply_module(
                                  Gen::E13, js.apply_fock(LadderOp::F23Create, true,
                                                          js.apply_module(Gen::E23, base)))));
        for (const auto& [k, c] : t4) joint_add(rhs_joint, k.first, k.second, c);

        FockVector rhs = project_hw(rhs_joint);

        CheckResult res;
        res.relation = "q-exponential factorization at " +
                       rep.basis[static_cast<std::size_t>(j)].first.str();
        if (!(lhs == rhs)) {
            res.passed = false;
            res.counterexample = rep.basis[static_cast<std::size_t>(j)].first.str();
            res.lhs = lhs.str();
            res.rhs = rhs.str();
        }
        report.checks.push_back(std::move(res));
    }
    return report;
}

}  // namespace uqgl21
