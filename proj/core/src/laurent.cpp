#include "uqgl21/laurent.hpp"

#include <stdexcept>

namespace uqgl21 {

Poly::Poly(mpq_class c) {
    if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }

Poly Poly::monomial(mpq_class c, std::size_t k) {
    if (c == 0) return Poly();
    std::vector<mpq_class> v(k + 1, mpq_class(0));
    v[k] = std::move(c);
    Poly p;
    p.c_ = std::move(v);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::low_order() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return c_.empty() ? 0 : k;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
    std::vector<mpq_class> c = a.c_;
    for (auto& x : c) x = -x;
    Poly r;
    r.c_ = std::move(c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    Poly r;
    r.c_ = std::move(c);
    r.trim();
    return r;
}

Poly operator*(const mpq_class& s, const Poly& a) {
    if (s == 0) return Poly();
    std::vector<mpq_class> c = a.c_;
    for (auto& x : c) x *= s;
    Poly r;
    r.c_ = std::move(c);
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw std::logic_error("Poly::divmod by zero");
    std::vector<mpq_class> r = a.c_;
    long db = b.degree();
    long dr = static_cast<long>(r.size()) - 1;
    if (dr < db) {
        quot = Poly();
        rem = a;
        return;
    }
    std::vector<mpq_class> q(dr - db + 1, mpq_class(0));
    for (long k = dr - db; k >= 0; --k) {
        mpq_class f = r[k + db] / b.c_[db];
        if (f == 0) continue;
        q[k] = f;
        for (long i = 0; i <= db; ++i) r[k + i] -= f * b.c_[i];
    }
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("Poly::div_exact: nonzero remainder");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    // Normalize monic.
    mpq_class inv = 1 / a.leading();
    return inv * a;
}

mpq_class Poly::eval(const mpq_class& z0) const {
    mpq_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z0 + *it;
    return acc;
}

Poly Poly::shifted_down(std::size_t k) const {
    if (k == 0) return *this;
    if (is_zero()) return Poly();
    std::vector<mpq_class> c(c_.begin() + static_cast<long>(k), c_.end());
    Poly r;
    r.c_ = std::move(c);
    return r;
}

Poly Poly::shifted_up(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<mpq_class> c(k, mpq_class(0));
    c.insert(c.end(), c_.begin(), c_.end());
    Poly r;
    r.c_ = std::move(c);
    return r;
}

Laurent::Laurent(long low_, Poly poly) : low(low_), p(std::move(poly)) {
    if (p.is_zero()) {
        low = 0;
        return;
    }
    std::size_t k = p.low_order();
    if (k > 0) {
        p = p.shifted_down(k);
        low += static_cast<long>(k);
    }
}

Laurent Laurent::from_poly(const Poly& poly) { return Laurent(0, poly); }

Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long low = std::min(a.low, b.low);
    return Laurent(low, a.p.shifted_up(static_cast<std::size_t>(a.low - low)) +
                            b.p.shifted_up(static_cast<std::size_t>(b.low - low)));
}

Laurent operator-(const Laurent& a) { return Laurent(a.low, -a.p); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    return Laurent(a.low + b.low, a.p * b.p);
}

}  // namespace uqgl21
