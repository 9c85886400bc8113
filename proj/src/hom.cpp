#include "auslander/hom.hpp"

#include <stdexcept>

namespace auslander {

namespace {

// A block of a differential encodes g = L*f or g = f*R on flattened matrices
// (row-major, f of shape fr x fc).  Coefficients land at
// dst[r0 + <out index>][c0 + <in index>].

void add_left_mult(QMat& dst, int r0, int c0, const QMat& l, int fc, int sign) {
    // out = l * f, f of shape (l.cols x fc)
    for (int r = 0; r < l.rows(); ++r)
        for (int k = 0; k < l.cols(); ++k) {
            if (l.at(r, k) == 0) continue;
            for (int c = 0; c < fc; ++c) dst.at(r0 + r * fc + c, c0 + k * fc + c) += sign * l.at(r, k);
        }
}

void add_right_mult(QMat& dst, int r0, int c0, const QMat& r_mat, int fr, int sign) {
    // out = f * r_mat, f of shape (fr x r_mat.rows)
    for (int r = 0; r < fr; ++r)
        for (int k = 0; k < r_mat.rows(); ++k)
            for (int c = 0; c < r_mat.cols(); ++c) {
                if (r_mat.at(k, c) == 0) continue;
                dst.at(r0 + r * r_mat.cols() + c, c0 + r * r_mat.rows() + k) += sign * r_mat.at(k, c);
            }
}

}  // namespace

HomComplex hom_complex(const Representation& m, const Representation& n) {
    if (!(m.algebra == n.algebra)) throw std::invalid_argument("hom_complex: algebra mismatch");
    int t = m.algebra.t;
    HomComplex c;
    c.t = t;
    c.m_dims = m.dims;
    c.n_dims = n.dims;

    c.block0_offset.resize(t + 1);
    for (int v = 1; v <= t; ++v) {
        c.block0_offset[v - 1] = c.dim0;
        c.dim0 += m.dim(v) * n.dim(v);
    }
    c.block0_offset[t] = c.dim0;

    std::vector<int> g_off(t + 1), h_off(t + 1);
    for (int i = 2; i <= t; ++i) {
        g_off[i] = c.dim1;
        c.dim1 += m.dim(i) * n.dim(i - 1);
        h_off[i] = c.dim1;
        c.dim1 += m.dim(i - 1) * n.dim(i);
    }
    std::vector<int> c2_off(t);
    for (int i = 1; i <= t - 1; ++i) {
        c2_off[i] = c.dim2;
        c.dim2 += m.dim(i) * n.dim(i);
    }

    c.d0 = QMat(c.dim1, c.dim0);
    c.d1 = QMat(c.dim2, c.dim1);

    // d0(f)_g[i] = beta^N_{i-1} f_i + f_{i-1} beta^M_{i-1}
    // d0(f)_h[i] = -alpha^N_{i-1} f_{i-1} - f_i alpha^M_{i-1}
    for (int i = 2; i <= t; ++i) {
        add_left_mult(c.d0, g_off[i], c.block0_offset[i - 1], n.b(i - 1), m.dim(i), +1);
        add_right_mult(c.d0, g_off[i], c.block0_offset[i - 2], m.b(i - 1), n.dim(i - 1), +1);
        add_left_mult(c.d0, h_off[i], c.block0_offset[i - 2], n.a(i - 1), m.dim(i - 1), -1);
        add_right_mult(c.d0, h_off[i], c.block0_offset[i - 1], m.a(i - 1), n.dim(i), -1);
    }

    // d1(g,h)_c[i] = alpha^N_{i-1} g_i + g_{i+1} alpha^M_i
    //             + beta^N_i h_{i+1} + h_i beta^M_{i-1}
    for (int i = 1; i <= t - 1; ++i) {
        if (i >= 2) {
            add_left_mult(c.d1, c2_off[i], g_off[i], n.a(i - 1), m.dim(i), +1);
            add_right_mult(c.d1, c2_off[i], h_off[i], m.b(i - 1), n.dim(i), +1);
        }
        add_right_mult(c.d1, c2_off[i], g_off[i + 1], m.a(i), n.dim(i), +1);
        add_left_mult(c.d1, c2_off[i], h_off[i + 1], n.b(i), m.dim(i), +1);
    }
    return c;
}

ExtTriple ext_dims(const Representation& m, const Representation& n) {
    HomComplex c = hom_complex(m, n);
    int r0 = rank(c.d0), r1 = rank(c.d1);
    return ExtTriple{c.dim0 - r0, (c.dim1 - r1) - r0, c.dim2 - r1};
}

long euler_pairing(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("euler_pairing: length mismatch");
    int t = int(u.size());
    long s = long(u[t - 1]) * v[t - 1];
    for (int i = 0; i + 1 < t; ++i) s += long(u[i]) * (v[i] - v[i + 1]) + long(v[i]) * (u[i] - u[i + 1]);
    return s;
}

long quadratic_form(const std::vector<int>& u) {
    long s = long(u[0]) * u[0];
    for (size_t i = 0; i + 1 < u.size(); ++i) s += long(u[i] - u[i + 1]) * (u[i] - u[i + 1]);
    return s;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
    HomComplex c = hom_complex(m, n);
    QMat k = kernel_basis(c.d0);
    std::vector<Morphism> out;
    for (int j = 0; j < k.cols(); ++j) {
        Morphism f{m, n, {}};
        for (int v = 1; v <= c.t; ++v) {
            QMat comp(n.dim(v), m.dim(v));
            int off = c.block0_offset[v - 1];
            // kernel vectors of the printed differential are sign-twisted
            // morphisms; undo the twist vertex by vertex
            int sign = (v % 2 == 0) ? 1 : -1;
            for (int r = 0; r < n.dim(v); ++r)
                for (int cc = 0; cc < m.dim(v); ++cc) comp.at(r, cc) = sign * k.at(off + r * m.dim(v) + cc, j);
            f.comps.push_back(comp);
        }
        int flip = 0;
        for (const QMat& comp : f.comps)
            for (int r = 0; r < comp.rows() && flip == 0; ++r)
                for (int cc = 0; cc < comp.cols() && flip == 0; ++cc)
                    if (comp.at(r, cc) != 0) flip = comp.at(r, cc) < 0 ? -1 : 1;
        if (flip == -1)
            for (QMat& comp : f.comps) comp = -comp;
        if (!is_morphism(f)) throw std::logic_error("hom_basis: kernel vector is not a morphism");
        out.push_back(std::move(f));
    }
    return out;
}

// Fixes one vertex at a time; adding a suitable small multiple of a basis
// element never has to revisit a vertex, since each already-fixed vertex
// rules out at most one scalar.
std::optional<Morphism> find_combination_nonzero_at(const std::vector<Morphism>& basis,
                                                    const std::vector<int>& verts, const Representation& src,
                                                    const Representation& tgt) {
    if (basis.empty() && !verts.empty()) return std::nullopt;
    Morphism f{src, tgt, {}};
    for (int v = 1; v <= src.algebra.t; ++v) f.comps.emplace_back(tgt.dim(v), src.dim(v));
    auto nonzero_at = [](const Morphism& g, int v) { return !g.c(v).is_zero(); };
    for (int v : verts) {
        if (nonzero_at(f, v)) continue;
        bool fixed = false;
        for (const Morphism& b : basis) {
            if (!nonzero_at(b, v)) continue;
            for (int c = 1; c <= int(verts.size()) + 2 && !fixed; ++c) {
                Morphism trial = f;
                for (int u = 1; u <= src.algebra.t; ++u) trial.comps[u - 1] = trial.comps[u - 1] + b.c(u) * Rat(c);
                bool ok = nonzero_at(trial, v);
                for (int u : verts)
                    if (nonzero_at(f, u) && !nonzero_at(trial, u)) ok = false;
                if (ok) {
                    f = std::move(trial);
                    fixed = true;
                }
            }
            if (fixed) break;
        }
        if (!fixed) return std::nullopt;
    }
    return f;
}

InequalityReport check_inequalities(const Representation& m, const Representation& n) {
    InequalityReport r;
    r.hom_mn = ext_dims(m, n).hom;
    r.ext2_nm = ext_dims(n, m).ext2;
    r.rank_m = rank(m);
    r.rank_n = rank(n);
    r.dominance = r.hom_mn >= r.ext2_nm;
    r.equality = r.hom_mn == r.ext2_nm;
    bool rank_zero = (r.rank_m == 0) || (r.rank_n == 0);
    r.rank_zero_implies = !rank_zero || r.equality;
    r.equality_implies = !r.equality || rank_zero;
    r.hom_two_needs_ext = !(r.rank_m == 1 && r.rank_n == 1 && r.hom_mn >= 2) || r.ext2_nm >= 1;
    return r;
}

}  // namespace auslander
