#include <doctest.h>

#include "auslander/classify.hpp"

using namespace auslander;

TEST_CASE("enumeration sizes and order") {
    std::vector<ThinModule> all3 = enumerate_thin(3);
    CHECK(all3.size() == 11);
    int full = 0;
    for (const ThinModule& m : all3)
        if (m.end == 3) ++full;
    CHECK(full == 7);
    CHECK(all3.front().str() == "1:AA");  // end desc, start asc, word lex
    CHECK(all3.back().str() == "1-1:");

    std::vector<ThinModule> all1 = enumerate_thin(1);
    REQUIRE(all1.size() == 1);
    CHECK(all1[0].str() == "1:");
}

TEST_CASE("combinatorial classification") {
    CHECK(classify_module(parse_thin(3, "1:AA")) == ModuleClass::Exceptional);
    CHECK(classify_module(parse_thin(3, "1-2:B")) == ModuleClass::Spherical2);
    CHECK(classify_module(parse_thin(3, "3:")) == ModuleClass::Exceptional);
}

TEST_CASE("homological classification") {
    for (int t = 1; t <= 4; ++t)
        for (const ThinModule& m : enumerate_thin(t)) {
            auto h = classify_homological(thin_rep(m));
            REQUIRE(h.has_value());
            CHECK(*h == classify_module(m));
        }
    QuiverAlgebra a3 = make_algebra(3);
    CHECK_FALSE(classify_homological(direct_sum(simple(a3, 1), simple(a3, 1))).has_value());
    // P(2) has rank 2 at t = 2, so it is neither exceptional nor 2-spherical here
    CHECK_FALSE(classify_homological(projective(make_algebra(2), 2)).has_value());
}

TEST_CASE("counting formulas") {
    CHECK(counts(1) == Counts{1, 0, 1, 1});
    CHECK(counts(3) == Counts{7, 4, 11, 6});
    CHECK(counts(4) == Counts{15, 11, 26, 24});
    for (int t = 1; t <= 9; ++t) {
        Counts c = counts(t);
        CHECK(c.exceptional + c.spherical == c.bricks);
    }
}
