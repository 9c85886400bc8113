#include <doctest.h>

#include "auslander/classify.hpp"
#include "auslander/hom.hpp"
#include "auslander/worms.hpp"

using namespace auslander;

namespace {

WormDiagram diagram_of(int t, const std::string& sigma_str) {
    return diagram_from_permutation(Permutation::parse(t, sigma_str));
}

}  // namespace

TEST_CASE("standard diagrams") {
    for (int t = 1; t <= 5; ++t) {
        WormDiagram del = diagram_of(t, Permutation::longest(t).str());
        WormDiagram nab = diagram_of(t, Permutation::identity(t).str());
        for (int k = 1; k <= t; ++k) {
            CHECK(del.worm(k).word == std::string(k - 1, 'A'));
            CHECK(nab.worm(k).word == std::string(t - k, 'B'));
        }
        CHECK(sigma(del) == Permutation::longest(t));
        CHECK(lambda_perm(del) == Permutation::identity(t));
        CHECK(lambda_perm(nab) == Permutation::longest(t));
        CHECK(f_count(del) == 0);
        CHECK(f_count(nab) == t * (t - 1) / 2);
    }
}

TEST_CASE("the 213 diagram of the running example") {
    WormDiagram d = diagram_of(3, "213");
    CHECK(d.worm(1).str() == "2:B");
    CHECK(d.worm(2).str() == "1:AB");
    CHECK(d.worm(3).str() == "3:");
    CHECK(f_count(d) == 2);

    // printed grid cells
    CHECK(worm_cells(d, 1) == std::vector<std::pair<int, int>>{{0, 2}, {0, 1}});
    CHECK(worm_cells(d, 2) == std::vector<std::pair<int, int>>{{1, 1}, {1, 0}, {0, 0}});
    CHECK(worm_cells(d, 3) == std::vector<std::pair<int, int>>{{2, 0}});

    Worm w2 = worm_data(d, 2);
    CHECK(w2.head == std::pair<int, int>{1, 1});
    CHECK(w2.mu_alpha == 0);
    CHECK(w2.mu_beta == 1);
    CHECK(worm_data(d, 3).mu_alpha == 0);
}

TEST_CASE("validity, round trip and permutation laws") {
    for (int t = 1; t <= 6; ++t) {
        std::vector<WormDiagram> diagrams = enumerate_diagrams(t);
        CHECK(diagrams.size() == size_t(count_formulas(t).sequences));
        Permutation omega = Permutation::longest(t);
        for (const WormDiagram& d : diagrams) {
            CHECK(diagram_valid(d));
            Permutation s = sigma(d);
            CHECK(diagram_from_permutation(s) == d);
            CHECK(lambda_perm(d) == omega.compose(s));
            int noninv = 0;
            for (int i = 1; i <= t; ++i)
                for (int j = i + 1; j <= t; ++j)
                    if (s(i) < s(j)) ++noninv;
            CHECK(f_count(d) == noninv);
        }
    }
}

TEST_CASE("vertical edges sit exactly under larger later starts") {
    for (int t = 2; t <= 5; ++t)
        for (const WormDiagram& d : enumerate_diagrams(t)) {
            Permutation s = sigma(d);
            for (int i = 1; i <= t; ++i)
                for (int j = i + 1; j <= t; ++j) {
                    bool lhs = s(i) < s(j);
                    bool edge_exists = s(i) < s(j);  // worm i reaches vertex s(j)-1 iff s(i) <= s(j)-1
                    bool rhs = edge_exists && d.worm(i).letter(s(j) - 1) == 'B';
                    CHECK(lhs == rhs);
                }
        }
}

TEST_CASE("a corrupted diagram fails the geometric check") {
    WormDiagram d = diagram_of(3, "213");
    WormDiagram bad = d;
    bad.worms[0] = bad.worms[1];  // duplicate lengths, overlapping cells
    CHECK_FALSE(diagram_valid(bad));
    bad = d;
    bad.worms[1].word = "AA";  // escapes the triangle
    CHECK_FALSE(diagram_valid(bad));
}

TEST_CASE("sequences of the standard diagrams") {
    int t = 4;
    QuiverAlgebra alg = make_algebra(t);
    std::vector<Representation> del = diagram_to_sequence(diagram_of(t, Permutation::longest(t).str()));
    std::vector<Representation> nab = diagram_to_sequence(diagram_of(t, Permutation::identity(t).str()));
    for (int k = 1; k <= t; ++k) {
        CHECK(del[k - 1] == delta(alg, k));
        CHECK(nab[k - 1] == nabla(alg, t + 1 - k));
    }
}

TEST_CASE("exceptional sequence verification") {
    for (int t = 1; t <= 4; ++t)
        for (const WormDiagram& d : enumerate_diagrams(t)) {
            std::vector<Representation> seq = diagram_to_sequence(d);
            CHECK(verify_exceptional_sequence(seq));
            std::vector<int> sum(t, 0);
            for (const Representation& e : seq)
                for (int v = 1; v <= t; ++v) sum[v - 1] += e.dim(v);
            std::vector<int> staircase(t);
            for (int v = 1; v <= t; ++v) staircase[v - 1] = v;
            CHECK(sum == staircase);
        }

    QuiverAlgebra a3 = make_algebra(3);
    std::vector<Representation> reversed{delta(a3, 3), delta(a3, 2), delta(a3, 1)};
    CHECK_FALSE(verify_exceptional_sequence(reversed));
    std::vector<Representation> repeated{delta(a3, 1), delta(a3, 1), delta(a3, 3)};
    CHECK_FALSE(verify_exceptional_sequence(repeated));
}

TEST_CASE("surjections and injections of thin modules") {
    QuiverAlgebra a3 = make_algebra(3);
    Representation p = projective(a3, 3);
    auto onto = find_surjection_onto_thin(p, parse_thin(3, "1:BB"));
    REQUIRE(onto.has_value());
    CHECK(is_surjective_morphism(*onto));
    CHECK(find_surjection_onto_thin(p, parse_thin(3, "3:")).has_value());
    // the image of any map out of P(3) into an all-forward worm stops at the top
    CHECK_FALSE(find_surjection_onto_thin(p, parse_thin(3, "1:AA")).has_value());
    CHECK_FALSE(find_surjection_onto_thin(thin_rep(parse_thin(3, "2:A")), parse_thin(3, "1:AA")).has_value());
    CHECK_FALSE(find_injection_of_thin(parse_thin(2, "1:B"), projective(make_algebra(2), 2)).has_value());
}

TEST_CASE("filtrations at small sizes") {
    // two filtrations of P(2): the bottom layer is Delta(2) for the
    // all-horizontal diagram and S(2) for the all-vertical one
    WormDiagram del2 = diagram_of(2, "21"), nab2 = diagram_of(2, "12");
    auto f = build_filtration(del2);
    REQUIRE(f.has_value());
    CHECK(thin_canonical_form(f->layers[0])->str() == "1:A");
    auto g = build_filtration(nab2);
    REQUIRE(g.has_value());
    CHECK(thin_canonical_form(g->layers[0])->str() == "2:");

    for (int t = 1; t <= 3; ++t) {
        QuiverAlgebra alg = make_algebra(t);
        for (const WormDiagram& d : enumerate_diagrams(t)) {
            auto filt = build_filtration(d);
            REQUIRE(filt.has_value());
            REQUIRE(int(filt->layers.size()) == t);
            CHECK(filt->layers[t - 1] == projective(alg, t));
            for (int l = 1; l <= t; ++l) {
                CHECK(rank(filt->layers[l - 1]) == l);
                if (l < t) {
                    CHECK(is_injective_morphism(filt->includes[l - 1]));
                    auto piece = thin_canonical_form(quotient_rep(filt->layers[l], filt->includes[l - 1]).rep);
                    REQUIRE(piece.has_value());
                    CHECK(*piece == d.worm(t - l));  // F^{l+1}/F^l is worm t-l
                }
            }
            CHECK(*thin_canonical_form(filt->layers[0]) == d.worm(t));
        }
    }
}
