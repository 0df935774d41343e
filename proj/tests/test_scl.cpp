#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modscl/chain.hpp"
#include "modscl/scl.hpp"
#include "modscl/word.hpp"

using namespace modscl;

namespace {
SclResult scl_of(const std::string& w) { return scl_word(canonicalize(parse_word(w)).word); }
}

TEST_CASE("scl vanishes on words conjugate to their inverses") {
    CHECK(scl_of("RL").value == 0);
    CHECK(scl_of("RLRL").value == 0);  // (RL)^2
}

TEST_CASE("golden value: scl(R7L2RL) = 5/12") {
    SclResult r = scl_of("R7L2RL");
    CHECK(r.value == Rational(5, 12));
}

TEST_CASE("golden values from the order-dependence example") {
    CHECK(scl_of("R3LRLR2LRL2").value == Rational(1, 6));
    CHECK(scl_of("R3LRLRLR2L2").value == Rational(4, 15));
}

TEST_CASE("extremality trio") {
    Extremality a = is_rot_extremal(canonicalize(parse_word("R3LRL2")).word);
    CHECK(a.extremal);
    CHECK(a.gap == 0);
    CHECK(a.scl_value == Rational(1, 12));

    Extremality b = is_rot_extremal(canonicalize(parse_word("R4LRL2")).word);
    CHECK_FALSE(b.extremal);
    CHECK(b.gap > 0);

    Extremality c = is_rot_extremal(canonicalize(parse_word("R7L2RL")).word);
    CHECK(c.extremal);
    CHECK(c.gap == 0);
}

TEST_CASE("Bavard bound on a small corpus") {
    for (const char* w : {"RL", "R2L", "RL2", "R2L2", "R3L", "R2LRL", "R3LRL2", "R2L2RL"}) {
        Canonical c = canonicalize(parse_word(w));
        SclResult s = scl_word(c.word);
        CHECK(s.value >= rot(c.word) / 2);
    }
}

TEST_CASE("homogeneity and power consistency") {
    CHECK(scl_of_power_consistency(canonicalize(parse_word("RL")).word, 2));
    CHECK(scl_of_power_consistency(canonicalize(parse_word("R2L")).word, 3));
    CHECK(scl_of_power_consistency(canonicalize(parse_word("R3LRL2")).word, 2));
}

TEST_CASE("conjugacy invariance of scl") {
    CyclicWord w = parse_word("R3LRL2");
    Rational base = scl_word(canonicalize(w).word).value;
    for (const CyclicWord& r : rotations(w))
        CHECK(scl_word(canonicalize(r).word).value == base);
}

TEST_CASE("chain admissibility errors carry the residue") {
    Chain c;
    c.add(parse_word("R2L"), 1);  // class +1
    try {
        scl(c);
        FAIL("expected a homology error");
    } catch (const SclError& e) {
        CHECK(e.code == SclErrorCode::Homology);
        CHECK(e.residue == 1);
    }
}

TEST_CASE("parabolic summands are rejected") {
    Chain c;
    c.add(parse_word("R6"), 1);
    CHECK_THROWS_AS(scl(c), SclError);
}

TEST_CASE("empty chain has scl 0") {
    Chain c;
    CHECK(scl(c).value == 0);
}

TEST_CASE("w + w^{-1} is a null chain") {
    // (RL2)^{-1} is conjugate to R2L; their sum has scl 0
    Chain c;
    c.add(parse_word("RL2"), 1);
    c.add(parse_word("R2L"), 1);
    CHECK(scl(c).value == 0);
}

TEST_CASE("negative coefficients pass through the inverse word") {
    // R2L2 is conjugate to its own inverse, so the sign cannot matter; both
    // chains are admissible (class 0).
    CHECK(scl(parse_chain("-1*R2L2")).value == scl(parse_chain("R2L2")).value);
    CHECK(scl(parse_chain("-1*RL")).value == 0);
}

TEST_CASE("nonzero-class words match the power extension") {
    // classes of order 3 and 2 keep the power words small
    Canonical c = canonicalize(parse_word("R3L"));  // class 2, killed by k = 3
    REQUIRE(homology_residue(c.word) == 2);
    Rational direct = scl_word(c.word).value;
    Rational via_power = scl_word(word_power(c.word, 3)).value / 3;
    CHECK(direct == via_power);

    Canonical d = canonicalize(parse_word("R4L"));  // class 3, killed by k = 2
    REQUIRE(homology_residue(d.word) == 3);
    Rational d_direct = scl_word(d.word).value;
    Rational d_power = scl_word(word_power(d.word, 2)).value / 2;
    CHECK(d_direct == d_power);
}

TEST_CASE("subadditivity on small chains") {
    std::mt19937 rng(5);
    const char* corpus[] = {"RL", "R2L2", "R2LRL", "R3LRL2"};
    for (int trial = 0; trial < 4; ++trial) {
        Chain c1, c2;
        c1.add(parse_word(corpus[rng() % 4]), 1);
        c2.add(parse_word(corpus[rng() % 4]), 1);
        if (homology_class(c1).residue != 0 || homology_class(c2).residue != 0) continue;
        Rational s1 = scl(c1).value, s2 = scl(c2).value, s12 = scl(c1 + c2).value;
        CHECK(s12 <= s1 + s2);
    }
}

TEST_CASE("oracle agreement on small hyperbolic words") {
    // xy-length <= 12: total exponent <= 6. The oracle is an upper bound,
    // equal whenever the LP optimum is integral at degree 1.
    for (int len = 2; len <= 6; ++len) {
        for (unsigned bits = 0; bits < (1u << len); ++bits) {
            std::vector<Block> blocks;
            for (int i = 0; i < len; ++i)
                blocks.push_back({(bits >> i) & 1 ? Letter::L : Letter::R, 1});
            Canonical c = canonicalize(CyclicWord(blocks));
            if (c.cls != ElementClass::Hyperbolic) continue;
            Rational lp = scl_word(c.word).value;
            Rational oracle = scl_bruteforce(c.word, 1);
            CHECK(oracle >= lp);
        }
    }
}

TEST_CASE("oracle reproduces the LP on the worked example") {
    Canonical c = canonicalize(parse_word("R7L2RL"));
    CHECK(scl_bruteforce(c.word, 2) == Rational(5, 12));
}

TEST_CASE("capacity guardrail") {
    std::vector<Block> blocks{{Letter::R, 90}, {Letter::L, 1}};
    CHECK_THROWS_AS(scl_word(CyclicWord(blocks), SclOptions{.xy_cap = 160, .lp_cap = 60,
                                                            .allow_certificate = false}),
                    SclError);
}
