#include <doctest.h>

#include "auslander/hom.hpp"
#include "auslander/thin.hpp"

using namespace auslander;

TEST_CASE("complex term dimensions") {
    QuiverAlgebra alg = make_algebra(3);
    Representation s1 = simple(alg, 1);
    HomComplex c = hom_complex(s1, s1);
    CHECK(c.dim0 == 1);
    CHECK(c.dim1 == 0);
    CHECK(c.dim2 == 1);

    Representation p = projective(alg, 3);
    HomComplex cp = hom_complex(p, p);
    CHECK(cp.dim0 == 1 + 4 + 9);
    CHECK(cp.dim2 == cp.dim0 - rank(p) * rank(p));  // the asymmetry at vertex t

    CHECK_THROWS_AS(hom_complex(s1, simple(make_algebra(4), 1)), std::invalid_argument);
}

TEST_CASE("term formulas and the complex property") {
    for (int t = 2; t <= 4; ++t) {
        QuiverAlgebra alg = make_algebra(t);
        std::vector<Representation> pool;
        for (const ThinModule& w : enumerate_thin(t)) pool.push_back(thin_rep(w));
        pool.push_back(projective(alg, t));
        pool.push_back(direct_sum(projective(alg, 1), nabla(alg, t)));
        for (const Representation& m : pool)
            for (const Representation& n : pool) {
                HomComplex c = hom_complex(m, n);
                int d0 = 0, d1 = 0, d2 = 0;
                for (int i = 1; i <= t; ++i) d0 += m.dim(i) * n.dim(i);
                for (int i = 2; i <= t; ++i) d1 += m.dim(i) * n.dim(i - 1) + m.dim(i - 1) * n.dim(i);
                for (int i = 1; i <= t - 1; ++i) d2 += m.dim(i) * n.dim(i);
                CHECK(c.dim0 == d0);
                CHECK(c.dim1 == d1);
                CHECK(c.dim2 == d2);
                CHECK((c.d1 * c.d0).is_zero());
            }
    }
}

TEST_CASE("ext patterns of simple modules") {
    for (int t = 3; t <= 4; ++t) {
        QuiverAlgebra alg = make_algebra(t);
        CHECK(ext_dims(simple(alg, 1), simple(alg, 2)) == ExtTriple{0, 1, 0});
        for (int i = 1; i < t; ++i) CHECK(ext_dims(simple(alg, i), simple(alg, i)) == ExtTriple{1, 0, 1});
        CHECK(ext_dims(simple(alg, t), simple(alg, t)) == ExtTriple{1, 0, 0});
        CHECK(ext_dims(delta(alg, 1), delta(alg, 2)) == ExtTriple{1, 1, 0});
    }
}

TEST_CASE("euler pairing and quadratic form") {
    int t = 4;
    auto e = [t](int i) {
        std::vector<int> v(t, 0);
        v[i - 1] = 1;
        return v;
    };
    CHECK(euler_pairing(e(t), e(t)) == 1);
    for (int i = 1; i < t; ++i) {
        CHECK(euler_pairing(e(i), e(i)) == 2);
        CHECK(euler_pairing(e(i), e(i + 1)) == -1);
    }
    CHECK(quadratic_form({1, 2, 3, 4}) == 4);
    CHECK(quadratic_form(e(1)) == 2);
    CHECK(quadratic_form(e(t)) == 1);
    CHECK_THROWS_AS(euler_pairing({1, 0}, {1, 0, 0}), std::invalid_argument);

    // q(u) = chi(u,u), and positivity on small nonnegative vectors
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                std::vector<int> u{a, b, c, 1};
                CHECK(quadratic_form(u) == euler_pairing(u, u));
                if (a + b + c + 1 > 0) CHECK(quadratic_form(u) >= 1);
            }
    CHECK(quadratic_form({0, 3, 1, 0}) >= 1);
}

TEST_CASE("euler consistency across brick pairs") {
    int t = 3;
    std::vector<Representation> bricks;
    for (const ThinModule& w : enumerate_thin(t)) bricks.push_back(thin_rep(w));
    for (const Representation& m : bricks)
        for (const Representation& n : bricks) {
            ExtTriple ext = ext_dims(m, n);
            CHECK(ext.hom - ext.ext1 + ext.ext2 == euler_pairing(m.dims, n.dims));
        }
}

TEST_CASE("hom bases") {
    QuiverAlgebra alg = make_algebra(3);
    Representation p = projective(alg, 3);
    for (const ThinModule& w : enumerate_thin(3))
        CHECK(int(hom_basis(p, thin_rep(w)).size()) == thin_rep(w).dim(3));

    // S(3) = Delta(1) embeds into Delta(2), so this hom space is a line
    std::vector<Morphism> maps = hom_basis(simple(alg, 3), delta(alg, 2));
    CHECK(maps.size() == 1);
    CHECK(int(maps.size()) == ext_dims(simple(alg, 3), delta(alg, 2)).hom);

    for (const Representation& m : {simple(alg, 2), delta(alg, 3), p}) {
        std::vector<Morphism> endos = hom_basis(m, m);
        bool has_identity = false;
        for (const Morphism& f : endos) {
            CHECK(is_morphism(f));
            if (f.comps == identity_morphism(m).comps) has_identity = true;
        }
        if (endos.size() == 1)
            CHECK(has_identity);
        else {
            // identity lies in the span of the basis
            std::vector<QMat> cols;
            for (const Morphism& f : endos) {
                QMat v(m.total_dim() * m.total_dim(), 1);
                int off = 0;
                for (int vx = 1; vx <= 3; ++vx)
                    for (int r = 0; r < f.c(vx).rows(); ++r)
                        for (int cc = 0; cc < f.c(vx).cols(); ++cc) v.at(off++, 0) = f.c(vx).at(r, cc);
                cols.push_back(v);
            }
            QMat idv(m.total_dim() * m.total_dim(), 1);
            Morphism id = identity_morphism(m);
            int off = 0;
            for (int vx = 1; vx <= 3; ++vx)
                for (int r = 0; r < id.c(vx).rows(); ++r)
                    for (int cc = 0; cc < id.c(vx).cols(); ++cc) idv.at(off++, 0) = id.c(vx).at(r, cc);
            CHECK(in_column_span(QMat::hstack(cols), idv));
        }
    }
}

TEST_CASE("inequality reports") {
    QuiverAlgebra alg = make_algebra(3);
    InequalityReport r = check_inequalities(simple(alg, 1), simple(alg, 1));
    CHECK(r.hom_mn == 1);
    CHECK(r.ext2_nm == 1);
    CHECK(r.dominance);
    CHECK(r.equality);
    CHECK(r.rank_zero_implies);

    // the designated stress case: equality 0 = 0 with both ranks one, so the
    // converse direction of the equality clause fails and is only reported
    InequalityReport s = check_inequalities(delta(alg, 2), delta(alg, 1));
    CHECK(s.hom_mn == 0);
    CHECK(s.ext2_nm == 0);
    CHECK(s.rank_m == 1);
    CHECK(s.rank_n == 1);
    CHECK(s.dominance);
    CHECK(s.rank_zero_implies);
    CHECK_FALSE(s.equality_implies);

    for (const ThinModule& wm : enumerate_thin(3))
        for (const ThinModule& wn : enumerate_thin(3)) {
            InequalityReport rr = check_inequalities(thin_rep(wm), thin_rep(wn));
            CHECK(rr.dominance);
            CHECK(rr.rank_zero_implies);
            CHECK(rr.hom_two_needs_ext);
        }
}
