#include <doctest.h>

#include <cmath>

#include "auslander/hom.hpp"
#include "auslander/worms.hpp"

using namespace auslander;

TEST_CASE("algebra shape") {
    CHECK(arrow_count(make_algebra(3)) == 4);
    CHECK(arrow_count(make_algebra(1)) == 0);
    CHECK(relation_count(make_algebra(4)) == 3);
    CHECK_THROWS_AS(make_algebra(0), std::invalid_argument);
}

TEST_CASE("named modules satisfy the relations") {
    for (int t = 1; t <= 6; ++t) {
        QuiverAlgebra alg = make_algebra(t);
        for (int i = 1; i <= t; ++i) {
            CHECK(check_relations(simple(alg, i)));
            CHECK(check_relations(projective(alg, i)));
            CHECK(check_relations(injective(alg, i)));
            CHECK(check_relations(delta(alg, i)));
            CHECK(check_relations(nabla(alg, i)));
        }
    }
}

TEST_CASE("relation checker rejects the identity pair") {
    QuiverAlgebra alg = make_algebra(3);
    Representation m = zero_padded(alg, {1, 1, 1});
    for (int v = 0; v < 2; ++v) {
        m.alpha[v].at(0, 0) = 1;
        m.beta[v].at(0, 0) = 1;
    }
    CHECK_FALSE(check_relations(m));  // beta alpha = 1 at vertex 1
}

TEST_CASE("dimension vectors and ranks") {
    QuiverAlgebra alg = make_algebra(5);
    Representation p = projective(alg, 5);
    CHECK(p.dims == std::vector<int>{1, 2, 3, 4, 5});
    for (int i = 1; i <= 5; ++i) {
        CHECK(delta(alg, i).total_dim() == i);
        CHECK(nabla(alg, i).total_dim() == i);
        for (int v = 1; v <= 5; ++v) {
            CHECK(projective(alg, i).dim(v) == std::min(i, v));
            CHECK(injective(alg, i).dim(v) == std::min(i, v));
        }
    }
    CHECK(delta(alg, 5).dims == std::vector<int>{1, 1, 1, 1, 1});

    QuiverAlgebra a3 = make_algebra(3);
    CHECK(rank(projective(a3, 3)) == 3);
    CHECK(rank(simple(a3, 2)) == 0);
    CHECK(rank(delta(a3, 2)) == 1);
}

TEST_CASE("direct sum") {
    QuiverAlgebra alg = make_algebra(3);
    Representation s12 = direct_sum(simple(alg, 1), simple(alg, 2));
    CHECK(s12.dims == std::vector<int>{1, 1, 0});
    CHECK(check_relations(s12));

    Representation zero = zero_padded(alg, {0, 0, 0});
    CHECK(direct_sum(projective(alg, 2), zero) == projective(alg, 2));

    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Representation sum = direct_sum(delta(alg, i), projective(alg, j));
            CHECK(rank(sum) == rank(delta(alg, i)) + rank(projective(alg, j)));
        }
    CHECK_THROWS_AS(direct_sum(simple(alg, 1), simple(make_algebra(4), 1)), std::invalid_argument);
}

TEST_CASE("duality is an involution") {
    QuiverAlgebra alg = make_algebra(4);
    for (int i = 1; i <= 4; ++i) {
        CHECK(dual(dual(projective(alg, i))) == projective(alg, i));
        CHECK(dual(simple(alg, i)) == simple(alg, i));
        CHECK(check_relations(dual(delta(alg, i))));
    }
}

TEST_CASE("thin canonical forms") {
    QuiverAlgebra a3 = make_algebra(3);
    auto d3 = thin_canonical_form(delta(a3, 3));
    REQUIRE(d3.has_value());
    CHECK(d3->str() == "1:AA");
    auto n2 = thin_canonical_form(nabla(a3, 2));
    REQUIRE(n2.has_value());
    CHECK(n2->str() == "2:B");
    CHECK_FALSE(thin_canonical_form(direct_sum(simple(a3, 1), simple(a3, 2))).has_value());
    CHECK_FALSE(thin_canonical_form(projective(a3, 2)).has_value());
    CHECK_FALSE(thin_canonical_form(zero_padded(a3, {0, 0, 0})).has_value());

    // scaling does not change the canonical form
    Representation m = thin_rep(parse_thin(3, "1:AB"));
    m.alpha[0].at(0, 0) = Rat(7, 3);
    m.beta[1].at(0, 0) = -5;
    auto w = thin_canonical_form(m);
    REQUIRE(w.has_value());
    CHECK(w->str() == "1:AB");
}

TEST_CASE("thin round trip for every word") {
    for (int t = 1; t <= 6; ++t)
        for (const ThinModule& m : enumerate_thin(t)) {
            Representation rep = thin_rep(m);
            CHECK(check_relations(rep));
            auto back = thin_canonical_form(rep);
            REQUIRE(back.has_value());
            CHECK(*back == m);
        }
}

TEST_CASE("worm string parsing") {
    ThinModule w = parse_thin(3, "1:AB");
    CHECK(w.start == 1);
    CHECK(w.end == 3);
    CHECK(w.word == "AB");
    CHECK(parse_thin(3, "3:").length() == 1);
    CHECK(parse_thin(3, "1-2:B").end == 2);
    CHECK(parse_thin(3, "1-1:").str() == "1-1:");
    CHECK_THROWS_AS(parse_thin(3, "1:ABC"), std::invalid_argument);
    CHECK_THROWS_AS(parse_thin(3, "0:AA"), std::invalid_argument);
    CHECK_THROWS_AS(parse_thin(3, "2:AX"), std::invalid_argument);
    CHECK_THROWS_AS(parse_thin(3, "noop"), std::invalid_argument);
}

TEST_CASE("projective equals injective at the last vertex") {
    for (int t = 2; t <= 5; ++t) {
        QuiverAlgebra alg = make_algebra(t);
        Representation p = projective(alg, t), i = injective(alg, t);
        CHECK(p.dims == i.dims);
        // look for an isomorphism among small combinations of the hom basis
        std::vector<Morphism> basis = hom_basis(p, i);
        CHECK(int(basis.size()) == t);
        bool found = false;
        std::vector<int> coeff(basis.size(), 0);
        for (long mask = 0; !found && mask < long(std::pow(3.0, int(basis.size()))); ++mask) {
            long m = mask;
            for (size_t k = 0; k < coeff.size(); ++k, m /= 3) coeff[k] = int(m % 3);
            Morphism f{p, i, {}};
            for (int v = 1; v <= t; ++v) {
                QMat comp(i.dim(v), p.dim(v));
                for (size_t k = 0; k < basis.size(); ++k)
                    if (coeff[k] != 0) comp = comp + basis[k].c(v) * Rat(coeff[k]);
                f.comps.push_back(comp);
            }
            found = is_injective_morphism(f) && is_surjective_morphism(f);
        }
        CHECK(found);
    }
}

TEST_CASE("kernel and quotient constructions") {
    QuiverAlgebra alg = make_algebra(3);
    Representation p = projective(alg, 3);
    std::vector<Morphism> maps = hom_basis(p, simple(alg, 3));
    REQUIRE(maps.size() == 1);
    SubRep rad = kernel_subrep(maps[0]);
    CHECK(rad.rep.dims == std::vector<int>{1, 2, 2});
    CHECK(check_relations(rad.rep));
    CHECK(is_morphism(rad.include));
    CHECK(is_injective_morphism(rad.include));

    Morphism inc = identity_morphism(p);
    QuotRep trivial = quotient_rep(p, inc);
    CHECK(trivial.rep.total_dim() == 0);

    // quotient of P(2) by its radical copy of Delta(2)
    QuiverAlgebra a2 = make_algebra(2);
    Representation p2 = projective(a2, 2);
    auto embed = find_injection_of_thin(parse_thin(2, "1:A"), p2);
    REQUIRE(embed.has_value());
    QuotRep q = quotient_rep(p2, *embed);
    auto w = thin_canonical_form(q.rep);
    REQUIRE(w.has_value());
    CHECK(w->str() == "2:");
    CHECK(is_morphism(q.project));
}
