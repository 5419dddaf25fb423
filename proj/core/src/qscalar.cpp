#include "uqgl21/qscalar.hpp"

#include <cctype>
#include <map>

#include "uqgl21/errors.hpp"

namespace uqgl21 {

QScalar::QScalar(const mpq_class& c) : num_(0, Poly(c)), den_(Poly::one()) {}

QScalar::QScalar(Laurent num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("QScalar: zero denominator");
    normalize();
}

QScalar QScalar::z_pow(long k) { return QScalar(Laurent(k, Poly::one()), Poly::one()); }

void QScalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    // Absorb any z-power of the denominator into the numerator offset.
    std::size_t k = den_.low_order();
    if (k > 0) {
        den_ = den_.shifted_down(k);
        num_.low -= static_cast<long>(k);
    }
    if (den_.is_constant()) {
        if (!(den_.leading() == 1)) {
            num_.p = mpq_class(1 / den_.leading()) * num_.p;
            den_ = Poly::one();
        }
        return;
    }
    Poly g = Poly::gcd(num_.p, den_);
    if (!g.is_constant()) {
        num_.p = Poly::div_exact(num_.p, g);
        den_ = Poly::div_exact(den_, g);
    }
    if (den_.is_constant()) {
        num_.p = mpq_class(1 / den_.leading()) * num_.p;
        den_ = Poly::one();
    } else if (!(den_.leading() == 1)) {
        mpq_class inv = 1 / den_.leading();
        num_.p = inv * num_.p;
        den_ = inv * den_;
    }
}

bool QScalar::is_one() const {
    return num_.low == 0 && num_.p == Poly::one() && den_ == Poly::one();
}

bool QScalar::is_rational() const {
    if (is_zero()) return true;
    return num_.low == 0 && num_.p.is_constant() && den_.is_constant();
}

mpq_class QScalar::as_rational() const {
    if (is_zero()) return mpq_class(0);
    return num_.p.coeff(0);
}

bool QScalar::is_integer() const {
    if (!is_rational()) return false;
    mpq_class r = as_rational();
    return r.get_den() == 1;
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::inverse() const {
    if (is_zero()) throw Error("QScalar: division by zero");
    QScalar r;
    r.num_ = Laurent(-num_.low, den_);
    r.den_ = num_.p;
    // Reduced inputs stay reduced under swap; only monic/offset fixup needed.
    std::size_t k = r.den_.low_order();
    if (k > 0) {
        r.den_ = r.den_.shifted_down(k);
        r.num_.low -= static_cast<long>(k);
    }
    if (!(r.den_.leading() == 1)) {
        mpq_class inv = 1 / r.den_.leading();
        r.num_.p = inv * r.num_.p;
        r.den_ = r.den_.is_constant() ? Poly::one() : inv * r.den_;
    }
    return r;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    QScalar r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        r.normalize();
        return r;
    }
    Poly g = Poly::gcd(a.den_, b.den_);
    if (g.is_constant()) {
        r.num_ = a.num_ * Laurent::from_poly(b.den_) + b.num_ * Laurent::from_poly(a.den_);
        r.den_ = a.den_ * b.den_;
        if (r.num_.is_zero()) return QScalar();
        // Cross terms are coprime to the denominator by construction.
        std::size_t k = r.den_.low_order();
        if (k > 0) {
            r.den_ = r.den_.shifted_down(k);
            r.num_.low -= static_cast<long>(k);
        }
        if (r.den_.is_constant()) {
            if (!(r.den_.leading() == 1)) r.num_.p = mpq_class(1 / r.den_.leading()) * r.num_.p;
            r.den_ = Poly::one();
        } else if (!(r.den_.leading() == 1)) {
            mpq_class inv = 1 / r.den_.leading();
            r.num_.p = inv * r.num_.p;
            r.den_ = inv * r.den_;
        }
        return r;
    }
    Poly e1 = Poly::div_exact(a.den_, g);
    Poly e2 = Poly::div_exact(b.den_, g);
    r.num_ = a.num_ * Laurent::from_poly(e2) + b.num_ * Laurent::from_poly(e1);
    r.den_ = a.den_ * e2;
    r.normalize();
    return r;
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
    if (a.is_zero() || b.is_zero()) return QScalar();
    // Cross-cancel before multiplying to keep degrees small.
    Poly n1 = a.num_.p, d2 = b.den_;
    Poly g1 = (d2.is_constant() || n1.is_constant()) ? Poly::one() : Poly::gcd(n1, d2);
    if (!g1.is_constant()) {
        n1 = Poly::div_exact(n1, g1);
        d2 = Poly::div_exact(d2, g1);
    }
    Poly n2 = b.num_.p, d1 = a.den_;
    Poly g2 = (d1.is_constant() || n2.is_constant()) ? Poly::one() : Poly::gcd(n2, d1);
    if (!g2.is_constant()) {
        n2 = Poly::div_exact(n2, g2);
        d1 = Poly::div_exact(d1, g2);
    }
    QScalar r;
    r.num_ = Laurent(a.num_.low + b.num_.low, n1 * n2);
    r.den_ = d1 * d2;
    // Factors are pairwise coprime; only monic/offset fixup needed.
    std::size_t k = r.den_.low_order();
    if (k > 0) {
        r.den_ = r.den_.shifted_down(k);
        r.num_.low -= static_cast<long>(k);
    }
    if (r.den_.is_constant()) {
        if (!(r.den_.leading() == 1)) r.num_.p = mpq_class(1 / r.den_.leading()) * r.num_.p;
        r.den_ = Poly::one();
    } else if (!(r.den_.leading() == 1)) {
        mpq_class inv = 1 / r.den_.leading();
        r.num_.p = inv * r.num_.p;
        r.den_ = inv * r.den_;
    }
    return r;
}

QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }

QScalar QScalar::pow(long k) const {
    if (k == 0) return QScalar::one();
    QScalar base = k > 0 ? *this : inverse();
    long m = k > 0 ? k : -k;
    QScalar r = QScalar::one();
    for (long i = 0; i < m; ++i) r *= base;
    return r;
}

mpq_class QScalar::eval_z(const mpq_class& z0) const {
    if (z0 == 0) throw Error("QScalar: evaluation at z = 0");
    mpq_class d = den_.eval(z0);
    if (d == 0) throw SingularEvaluation("denominator vanishes at z = " + z0.get_str());
    mpq_class n = num_.p.eval(z0);
    long low = num_.low;
    mpq_class zp(1);
    for (long i = 0; i < (low > 0 ? low : -low); ++i) zp *= z0;
    if (low >= 0) n *= zp;
    else n /= zp;
    return n / d;
}

bool rational_sqrt(const mpq_class& q0, mpq_class* z0) {
    if (q0 <= 0) return false;
    mpz_class n = q0.get_num(), d = q0.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    *z0 = mpq_class(sn, sd);
    return true;
}

mpq_class QScalar::eval_q(const mpq_class& q0) const {
    if (q0 == 0) throw Error("QScalar: evaluation at q = 0");
    mpq_class z0;
    if (!rational_sqrt(q0, &z0))
        throw Error("QScalar: q = " + q0.get_str() + " is not a square of a rational");
    return eval_z(z0);
}

QScalar qint(long n) {
    if (n == 0) return QScalar::zero();
    if (n < 0) return -qint(-n);
    // z^(2(n-1)) + z^(2(n-3)) + ... + z^(2(1-n)).
    std::vector<mpq_class> c(static_cast<std::size_t>(4 * (n - 1) + 1), mpq_class(0));
    for (long i = 0; i < n; ++i) c[static_cast<std::size_t>(4 * i)] = 1;
    return QScalar(Laurent(-2 * (n - 1), Poly(std::move(c))), Poly::one());
}

QScalar qpow(HalfInt k) { return QScalar::z_pow(k.twice()); }

QScalar qfact(long n) {
    QScalar r = QScalar::one();
    for (long i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

// ---------------------------------------------------------------------------
// Canonical string form.

namespace {

std::string term_str(const mpq_class& mag, long k) {
    std::string m = mag.get_str();
    if (k == 0) return m;
    std::string zp = (k == 1) ? "z" : "z^" + std::to_string(k);
    return m == "1" ? zp : m + "*" + zp;
}

std::string laurent_str(const Laurent& l) {
    if (l.is_zero()) return "0";
    std::string out;
    for (long i = l.p.degree(); i >= 0; --i) {
        mpq_class c = l.p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        bool neg = c < 0;
        mpq_class mag = neg ? mpq_class(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_str(mag, l.low + i);
    }
    return out;
}

struct Scanner {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }
    bool peek_digit() {
        skip_ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    long integer() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer", i);
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    }
    mpq_class rational_mag() {
        skip_ws();
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (b == i) throw ParseError("expected number", i);
        mpz_class num(s.substr(b, i - b));
        if (i < s.size() && s[i] == '/') {
            ++i;
            std::size_t b2 = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (b2 == i) throw ParseError("expected denominator", i);
            mpz_class den(s.substr(b2, i - b2));
            if (den == 0) throw ParseError("zero denominator in rational", i);
            mpq_class r(num, den);
            r.canonicalize();
            return r;
        }
        return mpq_class(num);
    }

    // term := [z-part | mag ['*' z-part]] with exponent via '^'.
    void term(std::map<long, mpq_class>& acc, bool negative) {
        skip_ws();
        mpq_class mag(1);
        long k = 0;
        bool have_z = false;
        if (i < s.size() && s[i] == 'z') {
            have_z = true;
        } else {
            mag = rational_mag();
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
                have_z = true;
            }
        }
        if (have_z) {
            if (i >= s.size() || s[i] != 'z') throw ParseError("expected 'z'", i);
            ++i;
            if (i < s.size() && s[i] == '^')
                ++i, k = integer();
            else
                k = 1;
        }
        acc[k] += negative ? mpq_class(-mag) : mag;
    }

    Laurent laurent() {
        std::map<long, mpq_class> acc;
        skip_ws();
        if (i < s.size() && s[i] == '0') {
            std::size_t save = i;
            ++i;
            skip_ws();
            if (i < s.size() && s[i] == ')') return Laurent();
            i = save;
        }
        bool neg = eat('-');
        term(acc, neg);
        while (true) {
            skip_ws();
            if (eat('+'))
                term(acc, false);
            else if (eat('-'))
                term(acc, true);
            else
                break;
        }
        if (acc.empty()) return Laurent();
        long low = acc.begin()->first;
        long high = acc.rbegin()->first;
        std::vector<mpq_class> c(static_cast<std::size_t>(high - low + 1), mpq_class(0));
        for (auto& [k, v] : acc) c[static_cast<std::size_t>(k - low)] = v;
        return Laurent(low, Poly(std::move(c)));
    }
};

}  // namespace

std::string QScalar::str() const {
    return "(" + laurent_str(num_) + ")/(" + laurent_str(Laurent::from_poly(den_)) + ")";
}

QScalar QScalar::parse(const std::string& s) {
    Scanner sc{s};
    sc.expect('(');
    Laurent num = sc.laurent();
    sc.expect(')');
    sc.expect('/');
    sc.expect('(');
    Laurent den = sc.laurent();
    sc.expect(')');
    sc.skip_ws();
    if (sc.i != s.size()) throw ParseError("trailing characters", sc.i);
    if (den.is_zero()) throw ParseError("zero denominator");
    if (den.low < 0) throw ParseError("denominator must be a true polynomial");
    return QScalar(num, den.p.shifted_up(static_cast<std::size_t>(den.low)));
}

}  // namespace uqgl21
