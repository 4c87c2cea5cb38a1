#include "doctest.h"
#include "families.hpp"
#include "oracle.hpp"
#include "support.hpp"
#include "tower.hpp"
#include "unknotting.hpp"

using namespace kinv;
using namespace testing_support;

namespace {

Err code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code;
    }
    return Err::Internal;
}

}  // namespace

TEST_CASE("make_singular") {
    Diagram tre = rolfsen("3_1");
    SingularDiagram s = make_singular(tre, {1}, kDefaultR3Budget);
    CHECK(s.marked == MarkedSet{1});
    CHECK(s.changed == change_crossings(tre, {1}));
    REQUIRE(s.epsilon.size() == 1);
    CHECK(s.epsilon[0] == crossing_sign(s.changed, 1));
    CHECK(s.epsilon[0] == -crossing_sign(tre, 1));
    CHECK(code_of([&] { make_singular(tre, {}, kDefaultR3Budget); }) == Err::Certification);
    CHECK(code_of([&] { make_singular(tre, {9}, kDefaultR3Budget); }) == Err::UnknownCrossing);
    // marked sets are stored sorted
    Diagram k = rolfsen("5_1");
    MarkedSet two = minimal_search(k, 3);
    REQUIRE(two.size() == 2);
    SingularDiagram sk = make_singular(k, {two[1], two[0]}, kDefaultR3Budget);
    CHECK(sk.marked == two);
}

TEST_CASE("build_loops") {
    SingularDiagram s = make_singular(rolfsen("3_1"), {1}, kDefaultR3Budget);
    auto loops = build_loops(s);
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].crossing == 1);
    // the subarc runs from one visit of crossing 1 to the other and passes
    // through the other two crossings once each
    CHECK(loops[0].interior.size() == 2);
    std::set<long> met;
    for (int p : loops[0].interior) met.insert(s.changed.ids()[static_cast<std::size_t>(s.changed.seq()[static_cast<std::size_t>(p)].crossing)]);
    CHECK(met == std::set<long>{2, 3});

    SingularDiagram none = make_singular(parse_pd("[]"), {}, kDefaultR3Budget);
    CHECK(build_loops(none).empty());
    CHECK(run_pipeline(parse_pd("[]"), {}).psi.rows() == 0);
}

TEST_CASE("framing kills the linking number with U") {
    for (const auto& c : rolfsen_dt_codes()) {
        Diagram d = rolfsen(c.name);
        for (long id : d.ids()) {
            SingularDiagram s;
            try {
                s = make_singular(d, {id}, kDefaultR3Budget);
            } catch (const Error&) {
                continue;
            }
            for (int flip = 0; flip < 2; ++flip)
                for (int side : {1, -1}) {
                    LoopChoices ch;
                    ch.flip_subarc = {flip};
                    ch.side = {side};
                    auto loops = build_loops(s, ch);
                    LinkDiagram link = loop_link(s, loops);
                    long before = link.lk(1, 0);
                    frame_loops(link, loops, s.changed.passes());
                    CHECK(loops[0].lk_initial == before);
                    CHECK(loops[0].tau == -before);
                    CHECK(link.lk(1, 0) == 0);
                    CHECK(link.lk(2, 0) == 0);
                    // the running height returns to its start after a full lap
                    CoverLinking cover(link);
                    CHECK(cover.heights(1).back() == 0);

                    // single loop route equals the crossing-circle route
                    CHECK(lambda_from_loops(link, loops) == lambda_from_surgery(s).lambda);
                }
        }
    }
}

TEST_CASE("gradings") {
    SingularDiagram s = make_singular(rolfsen("4_1"), minimal_search(rolfsen("4_1"), 1), kDefaultR3Budget);
    auto loops = build_loops(s);
    LinkDiagram link = loop_link(s, loops);
    frame_loops(link, loops, s.changed.passes());
    CoverLinking cover(link);
    auto cat = crossing_catalog(link, cover);
    CHECK(cat.size() == link.crossings().size());
    for (const auto& e : cat) {
        bool loops_only = e.over != 0 && e.under != 0;
        CHECK(e.grading.has_value() == loops_only);
        if (loops_only) CHECK(*e.grading == grade_crossing(link, cover, e.crossing));
        CHECK((e.sign == 1 || e.sign == -1));
    }
    CHECK(component_name(0) == "U");
    CHECK(component_name(1) == "L1");
    CHECK(component_name(2) == "L1'");
}

TEST_CASE("linking numbers of a hand-built link") {
    // Hopf link: two crossings, both positive, component 1 under at one
    LinkDiagram h(2);
    h.add_crossing(0, {0.0}, 1, {0.0}, true, 1);
    h.add_crossing(0, {1.0}, 1, {1.0}, false, 1);
    CHECK(h.lk(1, 0) == 1);
    CHECK(h.lk(0, 1) == 1);
    CHECK(h.traversal(0).size() == 2);
    h.set_start(0, 1);
    CHECK(h.traversal(0)[0].crossing == 1);
}

TEST_CASE("assemble_psi") {
    for (int n = -3; n <= 3; ++n) {
        LMatrix lam(1, 1);
        lam.at(0, 0) = Laurent(-n);
        CHECK(assemble_psi(lam, {1}).at(0, 0) == 1 - Laurent(n) * z());
    }
    LMatrix zero(1, 1);
    CHECK(assemble_psi(zero, {1}).det() == Laurent(1));
    LMatrix off(2, 2);
    Laurent p = 2 * t(3) - 1;
    off.at(0, 1) = p;
    off.at(1, 0) = p.involute();
    LMatrix psi = assemble_psi(off, {1, -1});
    CHECK(psi.at(0, 0) == Laurent(1));
    CHECK(psi.at(1, 1) == Laurent(-1));
    CHECK(psi.at(0, 1) == z() * p);
    CHECK(psi.at(1, 0) == z() * p.involute());
    CHECK(psi.is_hermitian());
    CHECK(code_of([&] { assemble_psi(off, {1}); }) == Err::Shape);
    CHECK(code_of([&] { assemble_psi(LMatrix(1, 2), {1}); }) == Err::Shape);
}

TEST_CASE("diagonal_unit_congruent") {
    std::mt19937_64 rng(51);
    LMatrix a = random_matrix(rng, 3);
    LMatrix d = LMatrix::diag({t(2), t(-1), Laurent(1)});
    CHECK(diagonal_unit_congruent(a, d.star() * a * d));
    CHECK(diagonal_unit_congruent(a, a));
    LMatrix b = a;
    b.at(0, 1) += 1;
    CHECK_FALSE(diagonal_unit_congruent(a, b));
}

TEST_CASE("twist knots") {
    for (int n = -3; n <= 3; ++n) {
        CAPTURE(n);
        PipelineOptions o;
        o.marked = MarkedSet{twist_clasp_id(n)};
        PipelineResult r = run_pipeline(twist_knot(n), o);
        REQUIRE(r.psi.rows() == 1);
        CHECK(equal_up_to_unit(r.det_psi, 1 - Laurent(n) * z()));
        CHECK(std::labs(r.loops[0].tau) == std::labs(n));
    }
}

TEST_CASE("pipeline properties over the corpus and seeds") {
    for (const auto& c : rolfsen_dt_codes()) {
        Diagram d = rolfsen(c.name);
        Laurent oracle = alexander_poly_oracle(d);
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            CAPTURE(c.name);
            CAPTURE(seed);
            PipelineOptions o;
            o.seed = seed;
            PipelineResult r = run_pipeline(d, o);
            const LMatrix& psi = r.psi;
            CHECK(psi.is_hermitian());
            CHECK(r.lambda.is_hermitian());
            CHECK(assemble_psi(r.lambda, r.singular.epsilon) == psi);
            auto one = psi.eval_int(1);
            for (std::size_t i = 0; i < psi.rows(); ++i)
                for (std::size_t j = 0; j < psi.cols(); ++j)
                    CHECK(one[i][j] == (i == j ? r.singular.epsilon[i] : 0));
            CHECK(abs(int_det(one)) == 1);
            CHECK(equal_up_to_unit(r.det_psi.involute(), r.det_psi));
            CHECK(equal_up_to_unit(r.det_psi, oracle));
            CHECK(r.delta == oracle.normalize_unit());
            CHECK(r.arf == arf_levine(oracle));
            for (std::size_t extra = 1; extra <= 2; ++extra) {
                LMatrix moved = psi_with_moved_basepoints(r, extra);
                CHECK(equal_up_to_unit(moved.det(), r.det_psi));
                CHECK(diagonal_unit_congruent(psi, moved));
            }
        }
    }
}

TEST_CASE("runs are deterministic given input and seed") {
    Diagram d = rolfsen("7_4");
    for (std::uint64_t seed : {0ULL, 5ULL, 99ULL}) {
        PipelineOptions o;
        o.seed = seed;
        CHECK(run_pipeline(d, o).to_json() == run_pipeline(d, o).to_json());
        CHECK(run_pipeline(d, o).to_json()["seed"] == seed);
    }
}

TEST_CASE("explicit and automatic marked sets") {
    Diagram d = rolfsen("6_2");
    PipelineOptions o;
    o.auto_unknot = AutoUnknot::Minimal;
    PipelineResult r = run_pipeline(d, o);
    CHECK(r.singular.marked == minimal_search(d, 3));
    o.marked = descending_set(d, 1);
    PipelineResult r2 = run_pipeline(d, o);
    CHECK(r2.singular.marked == descending_set(d, 1));
    CHECK(r2.delta == r.delta);
    o.marked = MarkedSet{};
    CHECK(code_of([&] { run_pipeline(d, o); }) == Err::Certification);
}
