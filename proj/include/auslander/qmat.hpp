/* Exact matrices over Q, with fraction-free (Bareiss) elimination over Z. */

#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

namespace auslander {

using Rat = mpq_class;
using Zint = mpz_class;

class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}
    QMat(std::initializer_list<std::initializer_list<long>> entries);

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    QMat operator*(const QMat& o) const;
    QMat operator*(const Rat& s) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator-() const;
    QMat transpose() const;

    QMat column(int j) const;
    // columns js of *this, in the given order
    QMat columns(const std::vector<int>& js) const;

    static QMat hstack(const std::vector<QMat>& parts);
    static QMat vstack(const std::vector<QMat>& parts);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

struct Echelon {
    std::vector<Zint> m;  // row echelon form, row-major, integer entries
    int rows = 0;
    int cols = 0;
    int rank = 0;
    std::vector<int> pivot_cols;
    std::vector<int> free_cols;
    int swap_sign = 1;
    Zint row_scale_product;  // product of the row scalings applied to clear denominators
};

Echelon echelon_form(const QMat& a);

int rank(const QMat& a);

// Columns form a basis of { x : a*x = 0 }; entries are coprime integers,
// first nonzero entry of each column positive.
QMat kernel_basis(const QMat& a);

// One solution of a*x = b (free variables set to 0). Returns false if none exists.
bool solve(const QMat& a, const QMat& b, QMat& x);

bool in_column_span(const QMat& a, const QMat& v);

Rat determinant(const QMat& a);

}  // namespace auslander
