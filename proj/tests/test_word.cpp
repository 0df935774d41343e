#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modscl/braid.hpp"
#include "modscl/chain.hpp"
#include "modscl/matrix.hpp"
#include "modscl/word.hpp"
#include "modscl/xyform.hpp"

using namespace modscl;

TEST_CASE("parse_word block sequences") {
    CyclicWord w = parse_word("R7L2RL");
    REQUIRE(w.blocks().size() == 4);
    CHECK(w.blocks()[0] == Block{Letter::R, 7});
    CHECK(w.blocks()[1] == Block{Letter::L, 2});
    CHECK(w.blocks()[2] == Block{Letter::R, 1});
    CHECK(w.blocks()[3] == Block{Letter::L, 1});

    CHECK(parse_word("R").blocks() == std::vector<Block>{{Letter::R, 1}});
    // merging deferred to canonicalize
    CHECK(parse_word("R2R3L").blocks() ==
          std::vector<Block>{{Letter::R, 2}, {Letter::R, 3}, {Letter::L, 1}});
    CHECK(parse_word("R^7 L2 R L").str() == "R7L2RL");
    CHECK_THROWS_AS(parse_word("R0L"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("XY"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
}

TEST_CASE("canonicalize merges, classifies, rotates") {
    Canonical c = canonicalize(CyclicWord({{Letter::R, 2}, {Letter::R, 3}, {Letter::L, 1}}));
    CHECK(c.word.blocks() == std::vector<Block>{{Letter::R, 5}, {Letter::L, 1}});
    CHECK(c.cls == ElementClass::Hyperbolic);

    Canonical par = canonicalize(parse_word("R4"));
    CHECK(par.cls == ElementClass::Parabolic);
    CHECK(par.word.str() == "R4");

    CHECK(canonicalize(CyclicWord{}).cls == ElementClass::Identity);

    // cyclic merge across the seam
    Canonical seam = canonicalize(parse_word("R2LR3"));
    CHECK(seam.word.str() == "R5L");

    // canonical rotation puts the largest R block first
    CHECK(canonicalize(parse_word("LR7L2R")).word.str() == "R7L2RL");
    CHECK(canonicalize(parse_word("L2RLR")).word.str() == "RL2RL");
}

TEST_CASE("matrix representatives") {
    ProjectiveMatrix m = to_matrix(parse_word("R7L2RL"));
    CHECK(m.a() == 37);
    CHECK(m.b() == 22);
    CHECK(m.c() == 5);
    CHECK(m.d() == 3);
    CHECK(m.det() == 1);

    CHECK(to_matrix(parse_word("R")) == ProjectiveMatrix(1, 1, 0, 1));
    CHECK(to_matrix(parse_word("RL")) == ProjectiveMatrix(2, 1, 1, 1));

    CHECK(classify_matrix(to_matrix(parse_word("RL"))) == ElementClass::Hyperbolic);
    CHECK(classify_matrix(to_matrix(parse_word("R"))) == ElementClass::Parabolic);
    CHECK(classify_matrix(gen_x()) == ElementClass::Elliptic2);
    CHECK(classify_matrix(gen_y()) == ElementClass::Elliptic3);

    // equality up to sign
    CHECK(ProjectiveMatrix(1, 1, 0, 1) == ProjectiveMatrix(-1, -1, 0, -1));
}

TEST_CASE("rot and Rademacher Psi") {
    CHECK(rot(parse_word("R7L2RL")) == Rational(5, 6));
    CHECK(rot(parse_word("RL")) == 0);
    CHECK(rot(parse_word("R3LRL2")) == Rational(1, 6));   // (3+1) - (1+2) = 1
    CHECK(rot(parse_word("RL2")) == Rational(-1, 6));
    CHECK(rot(parse_word("R4")) == Rational(2, 3));   // parabolic homogenization a/6
    CHECK(rot(parse_word("L3")) == Rational(-1, 2));  // -b/6

    CHECK(rademacher_psi(parse_word("R7L2RL")) == 5);
    CHECK(rademacher_psi(parse_word("RL")) == 0);
    CHECK(rademacher_psi(parse_word("R3LRL2")) == 1);
}

TEST_CASE("rot invariance and homogeneity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Block> blocks;
        int pairs = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < pairs; ++i) {
            blocks.push_back({Letter::R, 1 + static_cast<long>(rng() % 4)});
            blocks.push_back({Letter::L, 1 + static_cast<long>(rng() % 4)});
        }
        CyclicWord w(blocks);
        Rational base = rot(w);
        for (const CyclicWord& r : rotations(w)) CHECK(rot(r) == base);
        for (int n = 1; n <= 5; ++n) CHECK(rot(word_power(w, n)) == Rational(n) * base);

        // trace is rotation invariant up to sign
        Integer tr = to_matrix(canonicalize(w).word).trace();
        for (const CyclicWord& r : rotations(w)) {
            Integer tr2 = to_matrix(r).trace();
            CHECK((tr2 == tr || tr2 == -tr));
        }
    }
}

TEST_CASE("to_matrix respects concatenation") {
    CyclicWord u = parse_word("R2L");
    CyclicWord v = parse_word("RL3R");
    CHECK(to_matrix(concat(u, v)) == to_matrix(u) * to_matrix(v));
}

TEST_CASE("homology classes") {
    Chain c1;
    c1.add(parse_word("RL"), 1);
    CHECK(homology_class(c1).residue == 0);

    Chain c2;
    c2.add(parse_word("R"), 1);
    CHECK(homology_class(c2).residue == 1);

    Chain c3;
    c3.add(parse_word("R2L2"), Rational(1, 2));
    HomologyClass h3 = homology_class(c3);
    CHECK(h3.integral);
    CHECK(h3.residue == 0);

    Chain c4;
    c4.add(parse_word("R"), Rational(1, 2));
    CHECK_FALSE(homology_class(c4).integral);

    CHECK(homology_residue(parse_word("R4LRL2")) == 2);
}

TEST_CASE("chain parsing and arithmetic") {
    Chain c = parse_chain("1/2*R2L2 + RL");
    CHECK(c.terms().size() == 2);
    CHECK(c.terms().at("R2L2").second == Rational(1, 2));
    CHECK(c.terms().at("RL").second == 1);

    Chain d = parse_chain("RL + -1*RL");
    CHECK(d.empty());
}

TEST_CASE("braid projection") {
    BraidProjection p1 = braid_project(parse_braid("s2 s1-"));
    REQUIRE(p1.positive);
    CHECK(p1.word.str() == "RL");

    BraidProjection p2 = braid_project(parse_braid("s1 s2"));
    CHECK_FALSE(p2.positive);
    CHECK(p2.signed_form.str() == "R-1L");

    BraidProjection p3 = braid_project(parse_braid("s2 s2 s1- s2 s1-"));
    REQUIRE(p3.positive);
    CHECK(p3.word.str() == "RL2RL");

    // free cancellation across the cyclic seam
    BraidProjection p4 = braid_project(parse_braid("s1 s2 s1-"));
    REQUIRE(p4.positive);
    CHECK(p4.word.str() == "L");
}

TEST_CASE("xy dictionary") {
    CHECK(to_xy(parse_word("R")).y_exps == std::vector<int>{1});
    CHECK(to_xy(parse_word("L")).y_exps == std::vector<int>{2});
    CHECK(to_xy(parse_word("RL")).y_exps == std::vector<int>{1, 2});

    // matrix oracle: xy = -R, xy^2 = -L projectively
    CHECK(xy_matrix(to_xy(parse_word("R"))) == gen_R());
    CHECK(xy_matrix(to_xy(parse_word("L"))) == gen_L());
}

TEST_CASE("xy round trip is exhaustive up to total exponent 8") {
    for (int len = 1; len <= 8; ++len) {
        for (unsigned bits = 0; bits < (1u << len); ++bits) {
            std::vector<Block> blocks;
            for (int i = 0; i < len; ++i)
                blocks.push_back({(bits >> i) & 1 ? Letter::L : Letter::R, 1});
            CyclicWord w(blocks);
            XYWord xy = to_xy(w);
            CHECK(xy_matrix(xy) == to_matrix(w));
            CHECK(static_cast<long>(xy.syllables()) == 2 * w.total_exponent());
        }
    }
}

TEST_CASE("xy inverse is the reversed complement") {
    XYWord w = to_xy(parse_word("RL2"));
    XYWord inv = xy_inverse(w);
    CHECK(xy_to_word(inv).str() == "R2L");
    // double inverse returns the class
    CHECK(xy_to_word(xy_inverse(inv)).str() == "RL2");
}

TEST_CASE("R^n X is eventually hyperbolic unless X is a power of R") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Block> blocks;
        int len = 1 + static_cast<int>(rng() % 4);
        bool has_l = false;
        for (int i = 0; i < len; ++i) {
            Letter l = rng() % 2 ? Letter::L : Letter::R;
            has_l |= l == Letter::L;
            blocks.push_back({l, 1 + static_cast<long>(rng() % 3)});
        }
        CyclicWord x(blocks);
        bool eventually = true;
        for (long n = 10; n <= 50; n += 10)
            if (!is_hyperbolic(stabilize(x, n))) eventually = false;
        CHECK(eventually == has_l);
    }
    // a power of R stays parabolic forever
    for (long n = 1; n <= 50; ++n) CHECK(classify(stabilize(parse_word("R3"), n)) == ElementClass::Parabolic);
}
