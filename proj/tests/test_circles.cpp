#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <set>

#include "modscl/circle_search.hpp"

using namespace modscl;

namespace {
GlueDecision decide(const std::string& s, int p = 3) { return can_glue(parse_circle_state(s, p)); }
}

TEST_CASE("circle canonical form and parsing") {
    CHECK(parse_circle("211").canonical() == parse_circle("112").canonical());
    CHECK(parse_circle("11221").canonical().str() == "11122");
    CHECK(parse_circle("2").canonical().str() == "2");
    CHECK_THROWS_AS(parse_circle(""), std::invalid_argument);
}

TEST_CASE("figure-5 endgames with pinned cone orders") {
    GlueDecision d12 = decide("12");
    REQUIRE(d12.yes);
    CHECK(d12.cones == std::vector<int>{2, 2});

    GlueDecision d112 = decide("112");
    REQUIRE(d112.yes);
    CHECK(d112.cones == std::vector<int>{2, 3});

    GlueDecision d1112 = decide("1112");
    REQUIRE(d1112.yes);
    CHECK(d1112.cones == std::vector<int>{3, 3});
}

TEST_CASE("4.2 decisions") {
    CHECK_FALSE(decide("2").yes);
    CHECK_FALSE(decide("221").yes);
    CHECK_FALSE(decide("22211211211").yes);
    CHECK(decide("1212").yes);
    CHECK(decide("121212").yes);
}

TEST_CASE("necessary filters fire with the right reasons") {
    CHECK(*necessary_filters(parse_circle_state("2")) == NoReason::Count);
    CHECK(*necessary_filters(parse_circle_state("221")) == NoReason::Count);
    CHECK(*necessary_filters(parse_circle_state("22211211211")) == NoReason::RunLength);
    CHECK_FALSE(necessary_filters(parse_circle_state("12")).has_value());
    // a long 1-run may serve several 2-runs disjointly
    CHECK_FALSE(necessary_filters(parse_circle_state("221112")).has_value());
}

TEST_CASE("legal moves on 2 and 111") {
    CHECK(legal_moves(parse_circle_state("2")).empty());

    auto moves = legal_moves(parse_circle_state("111"));
    int edge_folds = 0, vertex_zips = 0;
    for (const Move& m : moves) {
        if (m.kind == MoveKind::EdgeFold) ++edge_folds;
        if (m.kind == MoveKind::ZipVertex) ++vertex_zips;
    }
    CHECK(edge_folds == 3);
    CHECK(vertex_zips >= 1);
}

TEST_CASE("one-handle amalgamates two circles") {
    CircleState s = parse_circle_state("112,112");
    Move m{MoveKind::OneHandle, 0, 0, 1, 0};
    MoveEffect e = apply_move(s, m);
    REQUIRE(e.ok);
    CHECK(s.circles.size() == 1);
    CHECK(s.circles[0].size() == 4);  // two 1-pairs became two 2s
    CHECK(s.circles[0].count_label(2) == 4);
    CHECK(e.delta_chi == -1);
}

TEST_CASE("search agrees with the unpruned oracle up to length 8") {
    std::set<std::string> seen;
    for (int len = 1; len <= 8; ++len) {
        for (unsigned bits = 0; bits < (1u << len); ++bits) {
            std::vector<int> labels;
            for (int i = 0; i < len; ++i) labels.push_back((bits >> i) & 1 ? 2 : 1);
            Circle c = Circle(labels).canonical();
            if (!seen.insert(c.str()).second) continue;
            CircleState s;
            s.p = 3;
            s.circles = {c};
            s.normalize();
            GlueDecision d = can_glue(s);
            REQUIRE(d.definite);
            bool oracle = oracle_can_glue(s);
            INFO("circle ", c.str());
            CHECK(d.yes == oracle);
            // filters never reject a gluable state
            if (oracle) CHECK_FALSE(necessary_filters(s).has_value());
        }
    }
}

TEST_CASE("yes certificates replay to empty with cones in {2,p}") {
    for (const char* lit : {"12", "112", "1112", "1212", "111", "211112"}) {
        CircleState s = parse_circle_state(lit);
        GlueDecision d = can_glue(s);
        if (!d.yes) continue;
        ReplayResult r = replay(s, d.certificate);
        CHECK_FALSE(r.failed_at.has_value());
        CHECK(r.final_state.done());
        for (int o : r.cones) CHECK((o == 2 || o == 3));
    }
}

TEST_CASE("sufficient family constructs certificates") {
    auto c7 = sufficient_family(parse_circle_state("21111111"));  // 2 1^7
    REQUIRE(c7.has_value());
    ReplayResult r = replay(parse_circle_state("21111111"), *c7);
    CHECK(r.final_state.done());

    const std::string fam79 = "2" + std::string(7, '1') + "2" + std::string(9, '1');
    auto c79 = sufficient_family(parse_circle_state(fam79));
    REQUIRE(c79.has_value());
    ReplayResult r2 = replay(parse_circle_state(fam79), *c79);
    CHECK(r2.final_state.done());

    CHECK_FALSE(sufficient_family(parse_circle_state("2111")).has_value());  // 2 1^3
    // alternating circles belong to the family too
    CHECK(sufficient_family(parse_circle_state("1212")).has_value());
}

TEST_CASE("cone bookkeeping: vertex closures produce the order-p points") {
    CircleState s = parse_circle_state("1112");
    GlueDecision d = can_glue(s);
    REQUIRE(d.yes);
    int order3 = 0;
    for (int o : d.cones)
        if (o == 3) ++order3;
    CHECK(order3 == 2);
}

TEST_CASE("p = 4 small states") {
    // 1 3 folds up completely: the 1(p-1) endgame
    GlueDecision d = decide("13", 4);
    CHECK(d.yes);
    // a lone 2 closes at p = 4 (its angle is pi), while a lone 3 cannot
    CHECK(decide("2", 4).yes);
    CHECK(legal_moves(parse_circle_state("3", 4)).empty());
}

TEST_CASE("golden decision table for circles of length <= 10 is frozen") {
    std::ifstream golden(std::string(MODSCL_TEST_DATA_DIR) + "/golden_circles.txt");
    REQUIRE(golden.good());
    std::string line;
    long checked = 0;
    while (std::getline(golden, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto sp = line.find(' ');
        REQUIRE(sp != std::string::npos);
        Circle c = parse_circle(line.substr(0, sp));
        bool want_yes = line.substr(sp + 1) == "YES";
        CircleState s;
        s.p = 3;
        s.circles = {c};
        s.normalize();
        GlueDecision d = can_glue(s);
        REQUIRE(d.definite);
        INFO("circle ", c.str());
        CHECK(d.yes == want_yes);
        ++checked;
    }
    CHECK(checked == 261);
}

TEST_CASE("partition extremality") {
    auto p1 = partition_extremality({30}, {5});
    REQUIRE(p1.has_value());
    CHECK((*p1)[0] == std::vector<long>{5});

    CHECK_FALSE(partition_extremality({12}, {5}).has_value());

    auto p3 = partition_extremality({25, 21}, {});
    REQUIRE(p3.has_value());
    CHECK((*p3)[0].empty());
    CHECK((*p3)[1].empty());

    auto p4 = partition_extremality({45, 22}, {5, 9, 2});
    REQUIRE(p4.has_value());
    long used0 = 10, used1 = 10;
    for (long b : (*p4)[0]) used0 += b + 10;
    for (long b : (*p4)[1]) used1 += b + 10;
    CHECK(used0 <= 45);
    CHECK(used1 <= 22);
}

TEST_CASE("every move strictly decreases labels plus circles") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Circle> circles;
        int nc = 1 + static_cast<int>(rng() % 2);
        for (int c = 0; c < nc; ++c) {
            std::vector<int> labels;
            int len = 2 + static_cast<int>(rng() % 6);
            for (int i = 0; i < len; ++i) labels.push_back(rng() % 3 == 0 ? 2 : 1);
            circles.push_back(Circle(labels));
        }
        CircleState s;
        s.p = 3;
        s.circles = circles;
        s.normalize();
        auto weight = [](const CircleState& st) {
            long w = static_cast<long>(st.circles.size());
            for (const Circle& c : st.circles) w += static_cast<long>(c.size());
            return w;
        };
        long before = weight(s);
        for (const Move& m : legal_moves(s)) {
            CircleState next = s;
            REQUIRE(apply_move(next, m).ok);
            CHECK(weight(next) < before);
        }
    }
}
