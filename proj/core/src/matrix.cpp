#include "uqgl21/matrix.hpp"

#include <stdexcept>

namespace uqgl21 {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, QScalar::one());
    return m;
}

QScalar QMatrix::at(int r, int c) const {
    const auto& row = data_[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? QScalar::zero() : it->second;
}

void QMatrix::set(int r, int c, const QScalar& v) {
    auto& row = data_[static_cast<std::size_t>(r)];
    if (v.is_zero())
        row.erase(c);
    else
        row[c] = v;
}

void QMatrix::add_to(int r, int c, const QScalar& v) {
    if (v.is_zero()) return;
    auto& row = data_[static_cast<std::size_t>(r)];
    auto [it, inserted] = row.try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
}

bool QMatrix::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

std::size_t QMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    QMatrix r = a;
    for (int i = 0; i < b.rows_; ++i)
        for (const auto& [c, v] : b.data_[static_cast<std::size_t>(i)]) r.add_to(i, c, v);
    return r;
}

QMatrix operator-(const QMatrix& a) {
    QMatrix r = a;
    for (auto& row : r.data_)
        for (auto& [c, v] : row) v = -v;
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + (-b); }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::logic_error("QMatrix: dimension mismatch");
    QMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (const auto& [k, av] : a.data_[static_cast<std::size_t>(i)]) {
            for (const auto& [j, bv] : b.data_[static_cast<std::size_t>(k)]) {
                r.add_to(i, j, av * bv);
            }
        }
    }
    return r;
}

QMatrix operator*(const QScalar& s, const QMatrix& a) {
    QMatrix r(a.rows_, a.cols_);
    if (s.is_zero()) return r;
    for (int i = 0; i < a.rows_; ++i)
        for (const auto& [c, v] : a.data_[static_cast<std::size_t>(i)]) r.set(i, c, s * v);
    return r;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<QScalar> QMatrix::apply(const std::vector<QScalar>& x) const {
    std::vector<QScalar> y(static_cast<std::size_t>(rows_), QScalar::zero());
    for (int i = 0; i < rows_; ++i)
        for (const auto& [c, v] : data_[static_cast<std::size_t>(i)])
            y[static_cast<std::size_t>(i)] += v * x[static_cast<std::size_t>(c)];
    return y;
}

std::optional<std::pair<int, int>> QMatrix::first_difference(const QMatrix& a, const QMatrix& b) {
    for (int i = 0; i < std::max(a.rows_, b.rows_); ++i) {
        for (int j = 0; j < std::max(a.cols_, b.cols_); ++j) {
            if (!(a.at(i, j) == b.at(i, j))) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

bool QMatrix::integer_diagonal(std::vector<long>* eigs) const {
    if (rows_ != cols_) return false;
    if (eigs) eigs->assign(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i) {
        for (const auto& [c, v] : data_[static_cast<std::size_t>(i)]) {
            if (c != i) return false;
            if (!v.is_integer()) return false;
            if (eigs) (*eigs)[static_cast<std::size_t>(i)] = v.as_rational().get_num().get_si();
        }
    }
    return true;
}

}  // namespace uqgl21
