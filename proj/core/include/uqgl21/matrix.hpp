#pragma once

#include <map>
#include <optional>
#include <vector>

#include "uqgl21/qscalar.hpp"

namespace uqgl21 {

/// Sparse matrix over Q(z); rows_[i] maps column -> nonzero entry.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {}
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    QScalar at(int r, int c) const;
    void set(int r, int c, const QScalar& v);
    void add_to(int r, int c, const QScalar& v);
    const std::map<int, QScalar>& row(int r) const { return data_[static_cast<std::size_t>(r)]; }

    bool is_zero() const;
    std::size_t nnz() const;

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QScalar& s, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b);

    std::vector<QScalar> apply(const std::vector<QScalar>& x) const;

    /// Location of the first entry where the two matrices differ.
    static std::optional<std::pair<int, int>> first_difference(const QMatrix& a, const QMatrix& b);

    /// True when the matrix is diagonal with integer entries; fills eigs.
    bool integer_diagonal(std::vector<long>* eigs) const;

  private:
    int rows_, cols_;
    std::vector<std::map<int, QScalar>> data_;
};

}  // namespace uqgl21
