#include "doctest.h"
#include "families.hpp"
#include "oracle.hpp"
#include "support.hpp"
#include "unknotting.hpp"

using namespace kinv;
using namespace testing_support;

TEST_CASE("descending_set examples") {
    Diagram tre = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
    MarkedSet s = descending_set(tre, 1);
    CHECK(s.size() <= 2);
    CHECK(verify_unknotted(change_crossings(tre, s)));
    CHECK(descending_set(parse_pd("[]"), 1).empty());
    // changing a descending set leaves a descending diagram
    Diagram desc = change_crossings(tre, s);
    CHECK(descending_set(desc, 1).empty());
    CHECK_THROWS_AS(descending_set(tre, 7), Error);
    CHECK_THROWS_AS(descending_set(tre, 0), Error);
}

TEST_CASE("descending sets certify at every basepoint") {
    for (const auto& c : rolfsen_dt_codes()) {
        Diagram d = rolfsen(c.name);
        for (int b = 1; b <= static_cast<int>(d.passes()); ++b) {
            CAPTURE(c.name);
            CAPTURE(b);
            MarkedSet s = descending_set(d, b);
            CHECK(std::is_sorted(s.begin(), s.end()));
            CHECK(verify_unknotted(change_crossings(d, s)));
            CHECK(s == descending_set(d, b));
        }
    }
}

TEST_CASE("verify_unknotted") {
    Diagram tre = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
    CHECK(verify_unknotted(change_crossings(tre, {1})));
    CHECK_FALSE(verify_unknotted(tre));
    CHECK(verify_unknotted(parse_pd("[]")));
    // a kink and a two-crossing unknot
    CHECK(verify_unknotted(parse_gauss("O1+ U1+")));
    CHECK(verify_unknotted(parse_gauss("O1+ O2- U2- U1+")));
}

TEST_CASE("the certifier never certifies a knot") {
    for (const auto& c : rolfsen_dt_codes()) {
        Diagram d = rolfsen(c.name);
        REQUIRE(!(alexander_poly_oracle(d) == Laurent(1)));
        CHECK_FALSE(verify_unknotted(d));
        CHECK_FALSE(verify_unknotted(mirror(d)));
    }
}

TEST_CASE("single moves remove crossings") {
    Diagram kink = parse_gauss("O1+ U1+");
    auto r = r1_step(kink);
    REQUIRE(r);
    CHECK(r->crossings() == 0);
    Diagram bigon = parse_gauss("O1+ O2- U2- U1+");
    auto r2 = r2_step(bigon);
    REQUIRE(r2);
    CHECK(r2->crossings() == 0);
    CHECK_FALSE(r1_step(rolfsen("3_1")));
    CHECK_FALSE(r2_step(rolfsen("3_1")));
}

TEST_CASE("minimal_search") {
    CHECK(minimal_search(rolfsen("3_1"), 3).size() == 1);
    CHECK(minimal_search(rolfsen("4_1"), 3).size() == 1);
    CHECK(minimal_search(parse_pd("[]"), 3).empty());
    // ties go to the lexicographically first set
    MarkedSet m = minimal_search(rolfsen("3_1"), 3);
    CHECK(m == MarkedSet{1});
    for (const auto& c : rolfsen_dt_codes()) {
        Diagram d = rolfsen(c.name);
        MarkedSet ms = minimal_search(d, 3);
        CAPTURE(c.name);
        CHECK(ms.size() <= descending_set(d, 1).size());
        CHECK(verify_unknotted(change_crossings(d, ms)));
        // the parallel search returns what a serial one does
        CHECK(minimal_search(d, 3, kDefaultR3Budget, 1) == ms);
    }
    // a zero size budget falls back to the descending set
    CHECK(minimal_search(rolfsen("5_2"), 0) == descending_set(rolfsen("5_2"), 1));
}

TEST_CASE("known unknotting numbers bound the minimal sets") {
    // sizes found within budget 3; unknotting numbers of these knots are the
    // lower bounds listed in the standard tables
    const std::map<std::string, std::size_t> lower = {{"3_1", 1}, {"4_1", 1}, {"5_1", 2}, {"5_2", 1}, {"6_1", 1},
                                                      {"6_2", 1}, {"6_3", 1}, {"7_1", 3}, {"7_2", 1}, {"7_3", 2},
                                                      {"7_4", 2}, {"7_5", 2}, {"7_6", 1}, {"7_7", 1}};
    for (const auto& [name, u] : lower) CHECK(minimal_search(rolfsen(name), 3).size() >= u);
}
