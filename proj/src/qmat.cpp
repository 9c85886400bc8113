#include "auslander/qmat.hpp"

#include <stdexcept>

namespace auslander {

QMat::QMat(std::initializer_list<std::initializer_list<long>> entries) {
    rows_ = int(entries.size());
    cols_ = rows_ ? int(entries.begin()->size()) : 0;
    a_.resize(size_t(rows_) * size_t(cols_));
    int i = 0;
    for (const auto& row : entries) {
        if (int(row.size()) != cols_)
            throw std::invalid_argument("QMat: ragged initializer");
        int j = 0;
        for (long v : row) at(i, j++) = v;
        ++i;
    }
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMat: shape mismatch in product");
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

QMat QMat::operator*(const Rat& s) const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

QMat QMat::operator+(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat: shape mismatch in sum");
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat: shape mismatch in difference");
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QMat QMat::operator-() const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMat QMat::column(int j) const { return columns({j}); }

QMat QMat::columns(const std::vector<int>& js) const {
    QMat r(rows_, int(js.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t k = 0; k < js.size(); ++k) r.at(i, int(k)) = at(i, js[k]);
    return r;
}

QMat QMat::hstack(const std::vector<QMat>& parts) {
    int rows = 0, cols = 0;
    for (const auto& p : parts) {
        cols += p.cols();
        rows = std::max(rows, p.rows());
    }
    for (const auto& p : parts)
        if (p.cols() > 0 && p.rows() != rows) throw std::invalid_argument("QMat: hstack row mismatch");
    QMat r(rows, cols);
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) r.at(i, off + j) = p.at(i, j);
        off += p.cols();
    }
    return r;
}

QMat QMat::vstack(const std::vector<QMat>& parts) {
    int rows = 0, cols = 0;
    for (const auto& p : parts) {
        rows += p.rows();
        cols = std::max(cols, p.cols());
    }
    for (const auto& p : parts)
        if (p.rows() > 0 && p.cols() != cols) throw std::invalid_argument("QMat: vstack column mismatch");
    QMat r(rows, cols);
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) r.at(off + i, j) = p.at(i, j);
        off += p.rows();
    }
    return r;
}

// Clear denominators row by row, then run one-step Bareiss elimination.
// Pivot choice is the first nonzero entry in the column, so the result is
// deterministic for a given input.
Echelon echelon_form(const QMat& a) {
    Echelon e;
    e.rows = a.rows();
    e.cols = a.cols();
    e.m.resize(size_t(e.rows) * size_t(e.cols));
    e.row_scale_product = 1;
    for (int i = 0; i < e.rows; ++i) {
        Zint l = 1;
        for (int j = 0; j < e.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den().get_mpz_t());
        e.row_scale_product *= l;
        for (int j = 0; j < e.cols; ++j) {
            Rat v = a.at(i, j) * l;
            e.m[size_t(i) * e.cols + j] = v.get_num();
        }
    }
    auto m = [&e](int i, int j) -> Zint& { return e.m[size_t(i) * e.cols + j]; };

    Zint prev = 1;
    int r = 0;
    for (int c = 0; c < e.cols && r < e.rows; ++c) {
        int p = -1;
        for (int i = r; i < e.rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) {
            e.free_cols.push_back(c);
            continue;
        }
        if (p != r) {
            for (int j = 0; j < e.cols; ++j) std::swap(m(p, j), m(r, j));
            e.swap_sign = -e.swap_sign;
        }
        for (int i = r + 1; i < e.rows; ++i) {
            for (int j = c + 1; j < e.cols; ++j) {
                Zint v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        e.pivot_cols.push_back(c);
        ++r;
    }
    for (int c = e.pivot_cols.empty() ? 0 : e.pivot_cols.back() + 1; c < e.cols; ++c)
        if (r >= e.rows) e.free_cols.push_back(c);
    e.rank = r;
    return e;
}

int rank(const QMat& a) { return echelon_form(a).rank; }

namespace {

// Back-substitute the echelon system rows 0..rank-1 for the pivot variables,
// given fixed values of the free variables. Solves m*x = rhs (rhs integer
// column already in the echelon row order is not available, so rhs must be 0
// here; kernel use only).
std::vector<Rat> back_substitute_kernel(const Echelon& e, int free_col) {
    std::vector<Rat> x(e.cols);
    x[free_col] = 1;
    for (int r = e.rank - 1; r >= 0; --r) {
        int p = e.pivot_cols[r];
        Rat s = 0;
        for (int j = p + 1; j < e.cols; ++j)
            if (x[j] != 0) s += Rat(e.m[size_t(r) * e.cols + j]) * x[j];
        x[p] = -s / Rat(e.m[size_t(r) * e.cols + p]);
    }
    return x;
}

}  // namespace

QMat kernel_basis(const QMat& a) {
    Echelon e = echelon_form(a);
    QMat k(a.cols(), int(e.free_cols.size()));
    for (size_t fi = 0; fi < e.free_cols.size(); ++fi) {
        std::vector<Rat> x = back_substitute_kernel(e, e.free_cols[fi]);
        Zint l = 1;
        for (const Rat& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        Zint g = 0;
        std::vector<Zint> xi(x.size());
        for (size_t i = 0; i < x.size(); ++i) {
            Rat v = x[i] * l;
            xi[i] = v.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), xi[i].get_mpz_t());
        }
        if (g == 0) g = 1;
        int sign = 1;
        for (const Zint& v : xi)
            if (v != 0) { sign = (v < 0) ? -1 : 1; break; }
        for (size_t i = 0; i < x.size(); ++i) k.at(int(i), int(fi)) = Rat(xi[i] * sign) / g;
    }
    return k;
}

bool solve(const QMat& a, const QMat& b, QMat& x) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    QMat aug = QMat::hstack({a, b});
    // Eliminate with pivots restricted to the a-columns: echelon_form picks the
    // first nonzero column, which may land in the b block once the a block is
    // exhausted; handle that by checking pivot positions afterwards.
    Echelon e = echelon_form(aug);
    for (int pc : e.pivot_cols)
        if (pc >= a.cols()) return false;  // inconsistent system
    x = QMat(a.cols(), b.cols());
    auto m = [&e](int i, int j) -> const Zint& { return e.m[size_t(i) * e.cols + j]; };
    for (int bc = 0; bc < b.cols(); ++bc) {
        std::vector<Rat> sol(a.cols());
        for (int r = int(e.pivot_cols.size()) - 1; r >= 0; --r) {
            int p = e.pivot_cols[r];
            Rat s = Rat(m(r, a.cols() + bc));
            for (int j = p + 1; j < a.cols(); ++j)
                if (sol[j] != 0) s -= Rat(m(r, j)) * sol[j];
            sol[p] = s / Rat(m(r, p));
        }
        for (int i = 0; i < a.cols(); ++i) x.at(i, bc) = sol[i];
    }
    return true;
}

bool in_column_span(const QMat& a, const QMat& v) {
    QMat x;
    return solve(a, v, x);
}

Rat determinant(const QMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    if (a.rows() == 0) return 1;
    Echelon e = echelon_form(a);
    if (e.rank < a.rows()) return 0;
    // Bareiss invariant: the last pivot is the determinant of the scaled matrix.
    Rat d = Rat(e.m[size_t(e.rank - 1) * e.cols + e.pivot_cols.back()]) * e.swap_sign;
    return d / Rat(e.row_scale_product);
}

}  // namespace auslander
