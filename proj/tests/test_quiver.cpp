#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mixquiv/quiver.hpp"

using namespace mixquiv;

namespace {

// V = {1,2,3}, ordinary 1, pair (2,3); used by several partition checks
Quiver mixed3() {
    return Quiver(3, {1}, {{2, 3}},
                  {{1, 1, 1},    // loop at 1          (A1)
                   {2, 1, 2},    // 1 -> i_q           (A1)
                   {3, 2, 1},    // i_q -> 1           (A1)
                   {4, 1, 3},    // 1 -> j_q           (A2)
                   {5, 3, 1}});  // j_q -> 1           (A3)
}

}  // namespace

TEST_CASE("partition invariants are enforced") {
    CHECK_THROWS_WITH(Quiver(2, {1, 2}, {{1, 2}}, {}),
                      doctest::Contains("lies in two partition cells"));
    CHECK_THROWS_WITH(Quiver(2, {1}, {}, {}), doctest::Contains("lies in no partition cell"));
    CHECK_THROWS_WITH(Quiver(2, {}, {{1, 1}}, {}), doctest::Contains("distinct"));
    CHECK_THROWS_WITH(Quiver(1, {1}, {}, {{1, 1, 2}}), doctest::Contains("not a vertex"));
}

TEST_CASE("classify_arrows: one-vertex loop is A1") {
    Quiver q(1, {1}, {}, {{1, 1, 1}});
    DimensionVector dv(q, {2});
    auto cls = classify_arrows(q, dv);
    CHECK(cls == std::vector<ArrowClass>{ArrowClass::A1});
}

TEST_CASE("classify_arrows on the two-vertex model quiver") {
    Quiver q = Quiver::ortho_model(3);
    DimensionVector dv(q, {2, 2});
    auto cls = classify_arrows(q, dv);
    CHECK(cls[0] == ArrowClass::A1);
    CHECK(cls[1] == ArrowClass::A1);
    CHECK(cls[2] == ArrowClass::A1);
    CHECK(cls[3] == ArrowClass::A2);  // b
    CHECK(cls[4] == ArrowClass::A3);  // c
}

TEST_CASE("arrows between two dualized vertices are rejected") {
    Quiver q(4, {}, {{1, 2}, {3, 4}}, {{1, 2, 4}});  // j_q -> j_{q'}
    CHECK_THROWS_WITH(q.classify(1), doctest::Contains("dualized"));
}

TEST_CASE("dimension vector compatibility") {
    Quiver q = Quiver::ortho_model(1);
    CHECK_THROWS_WITH(DimensionVector(q, {2, 3}), doctest::Contains("equal dimensions"));
    DimensionVector dv(q, {2, 2});
    CHECK(dv.starred(2));
    CHECK(!dv.starred(1));
}

TEST_CASE("doubled quiver endpoint rules") {
    SUBCASE("model quiver: bar of b runs i_q -> j_q again") {
        Quiver q = Quiver::ortho_model(1);
        DoubledQuiver dq(q);
        PathStep bbar{2, true};
        CHECK(dq.origin(bbar) == DQVertex{1, false});  // i(b̄): t(b)=j_q -> i_q
        CHECK(dq.end(bbar) == DQVertex{2, false});     // t(b̄): i(b)=i_q -> j_q
        PathStep abar{1, true};
        CHECK(dq.origin(abar) == DQVertex{2, false});  // loop at i_q flips to j_q
        CHECK(dq.end(abar) == DQVertex{2, false});
    }
    SUBCASE("ordinary loop: bar is a loop at the star") {
        Quiver q(1, {1}, {}, {{1, 1, 1}});
        DoubledQuiver dq(q);
        PathStep abar{1, true};
        CHECK(dq.origin(abar) == DQVertex{1, true});
        CHECK(dq.end(abar) == DQVertex{1, true});
    }
    SUBCASE("involution is a fixed-point-free self-inverse; |A^(d)| = 2|A|") {
        Quiver q = mixed3();
        DoubledQuiver dq(q);
        auto steps = dq.all_steps();
        CHECK(steps.size() == 2 * q.arrows().size());
        for (const PathStep& s : steps) {
            CHECK(dq.involution(s) != s);
            CHECK(dq.involution(dq.involution(s)) == s);
        }
    }
    SUBCASE("endpoints of barred steps follow the case rules on mixed3") {
        Quiver q = mixed3();
        DoubledQuiver dq(q);
        // arrow 2: 1 -> i_q; bar: i(2̄) driven by t=i_q -> j_q; t(2̄) by i=1 -> 1*
        CHECK(dq.origin({2, true}) == DQVertex{3, false});
        CHECK(dq.end({2, true}) == DQVertex{1, true});
        // arrow 4: 1 -> j_q (A2); bar: i(4̄) by t=j_q -> i_q; t(4̄) by i=1 -> 1*
        CHECK(dq.origin({4, true}) == DQVertex{2, false});
        CHECK(dq.end({4, true}) == DQVertex{1, true});
    }
}

TEST_CASE("multidegree totals and nonvacuity") {
    Quiver q = Quiver::ortho_model(1);
    Multidegree ok(q, {{1, 3}, {2, 2}, {3, 2}});
    CHECK(ok.r() == 7);
    CHECK(ok.s() == 2);
    CHECK(ok.t() == 3);
    CHECK(ok.nonvacuous());
    Multidegree bad(q, {{2, 1}});  // sum A2 = 1, sum A3 = 0
    CHECK(!bad.nonvacuous());
    CHECK_THROWS_WITH(HatQuiver(q, bad), doctest::Contains("unequal A2/A3 totals"));
}

TEST_CASE("hat quiver segments and class intervals (model, t=3 s=2)") {
    Quiver q = Quiver::ortho_model(1);
    Multidegree deg(q, {{1, 3}, {2, 2}, {3, 2}});
    HatQuiver hq(q, deg);
    CHECK(hq.r() == 7);
    for (int j = 1; j <= 3; ++j) {
        CHECK(hq.f(j) == 1);
        CHECK(hq.cls(j) == 1);
    }
    for (int j = 4; j <= 5; ++j) {
        CHECK(hq.f(j) == 2);
        CHECK(hq.cls(j) == 2);
    }
    for (int j = 6; j <= 7; ++j) {
        CHECK(hq.f(j) == 3);
        CHECK(hq.cls(j) == 3);
    }
    CHECK(hq.segment(1) == std::pair<int, int>{1, 3});
    // endpoints of j agree with endpoints of f(j)
    for (int j = 1; j <= 7; ++j) {
        CHECK(hq.origin(j) == q.arrow(hq.f(j)).from);
        CHECK(hq.end(j) == q.arrow(hq.f(j)).to);
    }
}

TEST_CASE("hat quiver: all-zero multidegree gives r = 0") {
    Quiver q = Quiver::ortho_model(1);
    Multidegree deg(q, {});
    HatQuiver hq(q, deg);
    CHECK(hq.r() == 0);
}

TEST_CASE("hat quiver: custom order must respect classes") {
    Quiver q = Quiver::ortho_model(2);
    Multidegree deg(q, {{1, 1}, {2, 1}, {3, 1}, {4, 1}});  // loops 1,2; b=3; c=4
    HatQuiver def(q, deg);
    CHECK(def.f(1) == 1);
    CHECK(def.f(2) == 2);
    HatQuiver swapped(q, deg, {2, 1, 3, 4});
    CHECK(swapped.f(1) == 2);
    CHECK(swapped.f(2) == 1);
    CHECK_THROWS_WITH(HatQuiver(q, deg, {3, 1, 2, 4}), doctest::Contains("A1 < A2 < A3"));
}

TEST_CASE("admissibility sets: one ordinary vertex with loops") {
    Quiver q(1, {1}, {}, {{1, 1, 1}, {2, 1, 1}});
    Multidegree deg(q, {{1, 2}, {2, 3}});
    AdmissibilitySets sets = admissibility_sets(HatQuiver(q, deg));
    REQUIRE(sets.cells.size() == 1);
    std::vector<int> all{1, 2, 3, 4, 5};
    CHECK(sets.cells[0].tcal == all);
    CHECK(sets.cells[0].ical == all);
}

TEST_CASE("admissibility sets: model quiver t=3 s=2 has T(q) = I(q) = [1,7]") {
    Quiver q = Quiver::ortho_model(1);
    Multidegree deg(q, {{1, 3}, {2, 2}, {3, 2}});
    AdmissibilitySets sets = admissibility_sets(HatQuiver(q, deg));
    REQUIRE(sets.cells.size() == 1);
    CHECK(sets.cells[0].is_pair);
    std::vector<int> all{1, 2, 3, 4, 5, 6, 7};
    CHECK(sets.cells[0].tcal == all);
    CHECK(sets.cells[0].ical == all);
}

TEST_CASE("admissibility sets partition [1,r] on a mixed 3-vertex quiver") {
    Quiver q = mixed3();
    Multidegree deg(q, {{1, 2}, {2, 1}, {3, 1}, {4, 2}, {5, 2}});
    HatQuiver hq(q, deg);
    AdmissibilitySets sets = admissibility_sets(hq);
    std::vector<int> tall, iall;
    for (const auto& c : sets.cells) {
        tall.insert(tall.end(), c.tcal.begin(), c.tcal.end());
        iall.insert(iall.end(), c.ical.begin(), c.ical.end());
    }
    std::sort(tall.begin(), tall.end());
    std::sort(iall.begin(), iall.end());
    std::vector<int> all;
    for (int j = 1; j <= hq.r(); ++j) all.push_back(j);
    CHECK(tall == all);
    CHECK(iall == all);
}

TEST_CASE("quiver json round trip and structured errors") {
    std::string text = R"({
      "vertices": 2,
      "ordinary": [],
      "pairs": [[1, 2]],
      "arrows": [{"id": 1, "from": 1, "to": 1},
                 {"id": 2, "from": 1, "to": 2},
                 {"id": 3, "from": 2, "to": 1}],
      "dims": {"1": 2, "2": 2}
    })";
    QuiverFile qf = parse_quiver_json(text);
    CHECK(qf.quiver.num_vertices() == 2);
    CHECK(qf.dims.has_value());
    CHECK((*qf.dims)[0] == 2);
    std::string dumped = quiver_to_json(qf.quiver, &*qf.dims);
    QuiverFile again = parse_quiver_json(dumped);
    CHECK(again.quiver.arrows().size() == 3);

    CHECK_THROWS_WITH(parse_quiver_json("{"), doctest::Contains("parse failure"));
    CHECK_THROWS_WITH(parse_quiver_json(R"({"vertices": 1, "arrows": []})"),
                      doctest::Contains("lies in no partition cell"));
    CHECK_THROWS_WITH(
        parse_quiver_json(
            R"({"vertices": 2, "ordinary": [1, 2], "arrows": [{"id": 1, "from": 1, "to": 5}]})"),
        doctest::Contains("not a vertex"));
}
