#include "uqgl21/coeff.hpp"

#include <sstream>

#include "uqgl21/errors.hpp"

namespace uqgl21 {

struct CoeffFn::Node {
    enum class Kind { Const, Affine, QPow, QNum, Add, Sub, Mul, Div, Neg };
    Kind kind;
    QScalar cval;              // Const
    mpq_class a, b;            // Affine: a*N + b
    long qa = 0;               // QPow: q^(qa*N + qb)
    HalfInt qb;
    long na = 0, nb = 0;       // QNum: [na*N + nb]_q
    std::shared_ptr<const Node> l, r;
};

namespace {

using Node = CoeffFn::Node;
using Kind = Node::Kind;

std::shared_ptr<const Node> mk(Node n) { return std::make_shared<const Node>(std::move(n)); }

std::string rat_str(const mpq_class& r) { return r.get_str(); }

std::string affine_arg_str(const mpq_class& a, const mpq_class& b) {
    if (a == 0) return rat_str(b);
    std::string out;
    if (a == 1)
        out = "N";
    else if (a == -1)
        out = "-N";
    else
        out = rat_str(a) + "*N";
    if (b > 0) out += " + " + rat_str(b);
    if (b < 0) out += " - " + rat_str(mpq_class(-b));
    return out;
}

mpq_class halfint_rat(HalfInt h) { return mpq_class(h.twice(), 2); }

std::string node_str(const Node& n) {
    switch (n.kind) {
        case Kind::Const: {
            mpq_class r = n.cval.as_rational();
            return r < 0 ? "(" + rat_str(r) + ")" : rat_str(r);
        }
        case Kind::Affine:
            return n.a == 0 ? (n.b < 0 ? "(" + rat_str(n.b) + ")" : rat_str(n.b))
                            : "(" + affine_arg_str(n.a, n.b) + ")";
        case Kind::QPow:
            return "qpow(" + affine_arg_str(n.qa, halfint_rat(n.qb)) + ")";
        case Kind::QNum:
            return "qnum(" + affine_arg_str(n.na, n.nb) + ")";
        case Kind::Add:
            return "(" + node_str(*n.l) + " + " + node_str(*n.r) + ")";
        case Kind::Sub:
            return "(" + node_str(*n.l) + " - " + node_str(*n.r) + ")";
        case Kind::Mul:
            return "(" + node_str(*n.l) + "*" + node_str(*n.r) + ")";
        case Kind::Div:
            return "(" + node_str(*n.l) + "/" + node_str(*n.r) + ")";
        case Kind::Neg:
            return "(-" + node_str(*n.l) + ")";
    }
    return "?";
}

QScalar node_eval(const Node& n, long x) {
    switch (n.kind) {
        case Kind::Const:
            return n.cval;
        case Kind::Affine:
            return QScalar(mpq_class(n.a * x + n.b));
        case Kind::QPow:
            return qpow(HalfInt(2 * n.qa * x + n.qb.twice()));
        case Kind::QNum:
            return qint(n.na * x + n.nb);
        case Kind::Add:
            return node_eval(*n.l, x) + node_eval(*n.r, x);
        case Kind::Sub:
            return node_eval(*n.l, x) - node_eval(*n.r, x);
        case Kind::Mul:
            return node_eval(*n.l, x) * node_eval(*n.r, x);
        case Kind::Div: {
            QScalar d = node_eval(*n.r, x);
            if (d.is_zero()) throw SingularCoefficient(x, node_str(*n.r));
            return node_eval(*n.l, x) / d;
        }
        case Kind::Neg:
            return -node_eval(*n.l, x);
    }
    return QScalar::zero();
}

std::shared_ptr<const Node> node_shift(const std::shared_ptr<const Node>& n, long k) {
    Node out = *n;
    switch (n->kind) {
        case Kind::Const:
            return n;
        case Kind::Affine:
            out.b = n->b + n->a * k;
            return mk(std::move(out));
        case Kind::QPow:
            out.qb = HalfInt(n->qb.twice() + 2 * n->qa * k);
            return mk(std::move(out));
        case Kind::QNum:
            out.nb = n->nb + n->na * k;
            return mk(std::move(out));
        case Kind::Neg:
            out.l = node_shift(n->l, k);
            return mk(std::move(out));
        default:
            out.l = node_shift(n->l, k);
            out.r = node_shift(n->r, k);
            return mk(std::move(out));
    }
}

}  // namespace

CoeffFn CoeffFn::constant(const QScalar& c) {
    if (!c.is_rational()) throw Error("CoeffFn::constant: not a rational constant");
    Node n;
    n.kind = Kind::Const;
    n.cval = c;
    return CoeffFn(mk(std::move(n)));
}

CoeffFn CoeffFn::affine(const mpq_class& a, const mpq_class& b) {
    Node n;
    n.kind = Kind::Affine;
    n.a = a;
    n.b = b;
    return CoeffFn(mk(std::move(n)));
}

CoeffFn CoeffFn::q_power(long a, HalfInt b) {
    Node n;
    n.kind = Kind::QPow;
    n.qa = a;
    n.qb = b;
    return CoeffFn(mk(std::move(n)));
}

CoeffFn CoeffFn::q_number(long a, long b) {
    Node n;
    n.kind = Kind::QNum;
    n.na = a;
    n.nb = b;
    return CoeffFn(mk(std::move(n)));
}

namespace {
std::shared_ptr<const Node> binop_nodes(Kind k, std::shared_ptr<const Node> l,
                                         std::shared_ptr<const Node> r) {
    Node n;
    n.kind = k;
    n.l = std::move(l);
    n.r = std::move(r);
    return mk(std::move(n));
}
}  // namespace

CoeffFn operator+(const CoeffFn& a, const CoeffFn& b) {
    return CoeffFn(binop_nodes(Kind::Add, a.node_, b.node_));
}
CoeffFn operator-(const CoeffFn& a, const CoeffFn& b) {
    return CoeffFn(binop_nodes(Kind::Sub, a.node_, b.node_));
}
CoeffFn operator*(const CoeffFn& a, const CoeffFn& b) {
    return CoeffFn(binop_nodes(Kind::Mul, a.node_, b.node_));
}
CoeffFn operator/(const CoeffFn& a, const CoeffFn& b) {
    return CoeffFn(binop_nodes(Kind::Div, a.node_, b.node_));
}
CoeffFn operator-(const CoeffFn& a) {
    Node n;
    n.kind = Kind::Neg;
    n.l = a.node_;
    return CoeffFn(mk(std::move(n)));
}

CoeffFn CoeffFn::shifted(long k) const {
    if (k == 0) return *this;
    return CoeffFn(node_shift(node_, k));
}

QScalar CoeffFn::eval(long n) const { return node_eval(*node_, n); }

std::string CoeffFn::str() const { return node_str(*node_); }

QScalar eval_coeff(const CoeffFn& f, long n) { return f.eval(n); }

CoeffFn shift(const CoeffFn& f, long k) { return f.shifted(k); }

CoeffFn standard_d(int i) {
    static const std::array<CoeffFn, 4> fns = [] {
        const CoeffFn one = CoeffFn::constant(1);
        const CoeffFn q = CoeffFn::q_power(0, HalfInt::whole(1));
        const CoeffFn qi = CoeffFn::q_power(0, HalfInt::whole(-1));
        const CoeffFn n0 = CoeffFn::q_number(1, 0);   // [N]
        const CoeffFn n1 = CoeffFn::q_number(1, 1);   // [N+1]
        const CoeffFn d1 = (q + one) / (CoeffFn::q_power(1, HalfInt::whole(1)) + one);
        const CoeffFn d2 = (n0 - n1 + one) / ((one - q) * (one - qi) * n1 * n0);
        const CoeffFn d3 = (one - CoeffFn::q_power(1, HalfInt::whole(1))) / (n1 * (one - q));
        // q^(N+1) (q+1)^2 / ((q^(N+1)+1) (q^(N+2)+1)) = q^(N+1) D1(N) D1(N+1).
        // This is the unique fourth coefficient function satisfying the
        // q-exponential factorization identity on the doubly-fermionic
        // sector; it matches the naive rational form only at q = 1.
        const CoeffFn d4 =
            (CoeffFn::q_power(1, HalfInt::whole(1)) * (q + one) * (q + one)) /
            ((CoeffFn::q_power(1, HalfInt::whole(1)) + one) *
             (CoeffFn::q_power(1, HalfInt::whole(2)) + one));
        return std::array<CoeffFn, 4>{d1, d2, d3, d4};
    }();
    if (i < 1 || i > 4) throw Error("standard_d: index out of range");
    return fns[static_cast<std::size_t>(i - 1)];
}

CoeffFamily CoeffFamily::standard() {
    CoeffFamily fam;
    for (int i = 1; i <= 4; ++i) fam.f[static_cast<std::size_t>(i - 1)] = standard_d(i);
    fam.is_standard = true;
    return fam;
}

CoeffFamily CoeffFamily::uniform(const std::string& expr_text) {
    CoeffFamily fam;
    CoeffFn fn = parse_coeff_fn(expr_text);
    fam.f = {fn, fn, fn, fn};
    fam.is_standard = false;
    return fam;
}

}  // namespace uqgl21
