#include "auslander/algebra.hpp"

#include <stdexcept>

namespace auslander {

QuiverAlgebra make_algebra(int t) {
    if (t < 1) throw std::invalid_argument("make_algebra: t must be >= 1");
    return QuiverAlgebra{t};
}

int relation_count(const QuiverAlgebra& alg) {
    return alg.t >= 2 ? alg.t - 1 : 0;  // one zero relation + t-2 commutativity
}

int Representation::total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
}

bool Representation::operator==(const Representation& o) const {
    return algebra == o.algebra && dims == o.dims && alpha == o.alpha && beta == o.beta;
}

Representation zero_padded(const QuiverAlgebra& alg, const std::vector<int>& dims) {
    if (int(dims.size()) != alg.t) throw std::invalid_argument("zero_padded: wrong dimension vector length");
    Representation m;
    m.algebra = alg;
    m.dims = dims;
    for (int v = 1; v < alg.t; ++v) {
        m.alpha.emplace_back(dims[v], dims[v - 1]);
        m.beta.emplace_back(dims[v - 1], dims[v]);
    }
    return m;
}

bool shapes_valid(const Representation& m) {
    int t = m.algebra.t;
    if (int(m.dims.size()) != t) return false;
    if (int(m.alpha.size()) != t - 1 || int(m.beta.size()) != t - 1) return false;
    for (int v = 1; v < t; ++v) {
        if (m.a(v).rows() != m.dim(v + 1) || m.a(v).cols() != m.dim(v)) return false;
        if (m.b(v).rows() != m.dim(v) || m.b(v).cols() != m.dim(v + 1)) return false;
    }
    for (int d : m.dims)
        if (d < 0) return false;
    return true;
}

bool check_relations(const Representation& m) {
    if (!shapes_valid(m)) throw std::invalid_argument("check_relations: shape mismatch");
    int t = m.algebra.t;
    if (t == 1) return true;
    if (!(m.b(1) * m.a(1)).is_zero()) return false;
    for (int v = 2; v <= t - 1; ++v)
        if (!(m.a(v - 1) * m.b(v - 1) == m.b(v) * m.a(v))) return false;
    return true;
}

Representation simple(const QuiverAlgebra& alg, int i) {
    if (i < 1 || i > alg.t) throw std::out_of_range("simple: vertex out of range");
    std::vector<int> d(alg.t, 0);
    d[i - 1] = 1;
    return zero_padded(alg, d);
}

// P(i) has basis {s : max(0, v-i) <= s <= v-1} at vertex v; the forward arrow
// shifts s by one, the backward arrow keeps s and kills the top index s = v.
Representation projective(const QuiverAlgebra& alg, int i) {
    if (i < 1 || i > alg.t) throw std::out_of_range("projective: vertex out of range");
    int t = alg.t;
    std::vector<int> d(t);
    auto lo = [i](int v) { return std::max(0, v - i); };
    for (int v = 1; v <= t; ++v) d[v - 1] = v - lo(v);
    Representation m = zero_padded(alg, d);
    for (int v = 1; v < t; ++v) {
        for (int s = lo(v); s <= v - 1; ++s) m.alpha[v - 1].at(s + 1 - lo(v + 1), s - lo(v)) = 1;
        for (int s = lo(v + 1); s <= v - 1; ++s) m.beta[v - 1].at(s - lo(v), s - lo(v + 1)) = 1;
    }
    return m;
}

Representation injective(const QuiverAlgebra& alg, int i) { return dual(projective(alg, i)); }

Representation delta(const QuiverAlgebra& alg, int i) {
    if (i < 1 || i > alg.t) throw std::out_of_range("delta: vertex out of range");
    int t = alg.t;
    std::vector<int> d(t, 0);
    for (int v = t + 1 - i; v <= t; ++v) d[v - 1] = 1;
    Representation m = zero_padded(alg, d);
    for (int v = t + 1 - i; v < t; ++v) m.alpha[v - 1].at(0, 0) = 1;
    return m;
}

Representation nabla(const QuiverAlgebra& alg, int i) {
    if (i < 1 || i > alg.t) throw std::out_of_range("nabla: vertex out of range");
    int t = alg.t;
    std::vector<int> d(t, 0);
    for (int v = t + 1 - i; v <= t; ++v) d[v - 1] = 1;
    Representation m = zero_padded(alg, d);
    for (int v = t + 1 - i; v < t; ++v) m.beta[v - 1].at(0, 0) = 1;
    return m;
}

int rank(const Representation& m) { return m.dims.back(); }

Representation direct_sum(const Representation& x, const Representation& y) {
    if (!(x.algebra == y.algebra)) throw std::invalid_argument("direct_sum: algebra mismatch");
    int t = x.algebra.t;
    std::vector<int> d(t);
    for (int v = 0; v < t; ++v) d[v] = x.dims[v] + y.dims[v];
    Representation m = zero_padded(x.algebra, d);
    auto block = [](QMat& dst, const QMat& a, const QMat& b) {
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) dst.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) dst.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    };
    for (int v = 0; v < t - 1; ++v) {
        block(m.alpha[v], x.alpha[v], y.alpha[v]);
        block(m.beta[v], x.beta[v], y.beta[v]);
    }
    return m;
}

Representation dual(const Representation& m) {
    Representation d = zero_padded(m.algebra, m.dims);
    for (int v = 0; v < m.algebra.t - 1; ++v) {
        d.alpha[v] = m.beta[v].transpose();
        d.beta[v] = m.alpha[v].transpose();
    }
    return d;
}

bool is_morphism(const Morphism& f) {
    const Representation &m = f.source, &n = f.target;
    if (!(m.algebra == n.algebra) || int(f.comps.size()) != m.algebra.t) return false;
    for (int v = 1; v <= m.algebra.t; ++v)
        if (f.c(v).rows() != n.dim(v) || f.c(v).cols() != m.dim(v)) return false;
    for (int v = 1; v < m.algebra.t; ++v) {
        if (!(f.c(v + 1) * m.a(v) == n.a(v) * f.c(v))) return false;
        if (!(f.c(v) * m.b(v) == n.b(v) * f.c(v + 1))) return false;
    }
    return true;
}

Morphism identity_morphism(const Representation& m) {
    Morphism f{m, m, {}};
    for (int d : m.dims) f.comps.push_back(QMat::identity(d));
    return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    Morphism h{f.source, g.target, {}};
    for (int v = 1; v <= f.source.algebra.t; ++v) h.comps.push_back(g.c(v) * f.c(v));
    return h;
}

bool is_injective_morphism(const Morphism& f) {
    for (int v = 1; v <= f.source.algebra.t; ++v)
        if (rank(f.c(v)) != f.source.dim(v)) return false;
    return true;
}

bool is_surjective_morphism(const Morphism& f) {
    for (int v = 1; v <= f.source.algebra.t; ++v)
        if (rank(f.c(v)) != f.target.dim(v)) return false;
    return true;
}

SubRep kernel_subrep(const Morphism& f) {
    const Representation& m = f.source;
    int t = m.algebra.t;
    std::vector<QMat> bases;
    std::vector<int> kd(t);
    for (int v = 1; v <= t; ++v) {
        bases.push_back(kernel_basis(f.c(v)));
        kd[v - 1] = bases.back().cols();
    }
    Representation k = zero_padded(m.algebra, kd);
    for (int v = 1; v < t; ++v) {
        // the kernel is arrow-stable, so these systems are always solvable
        if (!solve(bases[v], m.a(v) * bases[v - 1], k.alpha[v - 1]))
            throw std::logic_error("kernel_subrep: kernel not alpha-stable");
        if (!solve(bases[v - 1], m.b(v) * bases[v], k.beta[v - 1]))
            throw std::logic_error("kernel_subrep: kernel not beta-stable");
    }
    return SubRep{k, Morphism{k, m, bases}};
}

QuotRep quotient_rep(const Representation& m, const Morphism& include) {
    int t = m.algebra.t;
    std::vector<QMat> proj(t), lift(t);
    std::vector<int> qd(t);
    for (int v = 1; v <= t; ++v) {
        const QMat& u = include.c(v);
        int mv = m.dim(v), ur = rank(u);
        std::vector<QMat> cols;
        if (u.cols() > 0) cols.push_back(u);
        int have = ur;
        QMat id = QMat::identity(mv);
        std::vector<int> picked;
        for (int j = 0; j < mv && have < mv; ++j) {
            cols.push_back(id.column(j));
            if (rank(QMat::hstack(cols)) > have) {
                ++have;
                picked.push_back(j);
            } else {
                cols.pop_back();
            }
        }
        qd[v - 1] = mv - ur;
        lift[v - 1] = id.columns(picked);
        QMat full = QMat::hstack({u, lift[v - 1]});
        QMat inv;
        if (!solve(full, id, inv)) throw std::invalid_argument("quotient_rep: inclusion is not injective");
        proj[v - 1] = QMat(qd[v - 1], mv);
        for (int i = 0; i < qd[v - 1]; ++i)
            for (int j = 0; j < mv; ++j) proj[v - 1].at(i, j) = inv.at(u.cols() + i, j);
    }
    Representation q = zero_padded(m.algebra, qd);
    for (int v = 1; v < t; ++v) {
        q.alpha[v - 1] = proj[v] * (m.a(v) * lift[v - 1]);
        q.beta[v - 1] = proj[v - 1] * (m.b(v) * lift[v]);
    }
    return QuotRep{q, Morphism{m, q, proj}};
}

}  // namespace auslander
