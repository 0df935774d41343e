#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "modscl/lab.hpp"

using namespace modscl;

TEST_CASE("stabilization arms") {
    CHECK(stabilization(parse_word("LRL2"), 3).str() == "R3LRL2");
    CHECK(stabilization(parse_word("RL"), -2).str() == "RL3");  // L^2 RL merges cyclically
    CHECK(stabilization(parse_word("RL"), 0).str() == "RL");
}

TEST_CASE("n_of_x on the stuttering families") {
    ExperimentConfig cfg;
    cfg.bound = 4;
    auto n = n_of_x(parse_word("LRL2"), cfg);
    REQUIRE(n.has_value());
    CHECK(*n <= 3);  // R3LRL2 is extremal

    // X with rot extremal already at n = 0 under the zero-first order
    ExperimentConfig zf = cfg;
    zf.scan_most_negative_first = false;
    auto n0 = n_of_x(parse_word("R7L2RL"), zf);
    REQUIRE(n0.has_value());
    CHECK(*n0 == 0);
}

TEST_CASE("stutter profile of LRL2") {
    ExperimentConfig cfg;
    StutterReport rep = stutter_scan(parse_word("LRL2"), 5, cfg);
    REQUIRE(rep.profile.size() == 6);
    // the paper pins n = 3 true and n = 4 false; n = 2 happens to be
    // extremal too (rot = 0 and R2LRL2 is conjugate to its inverse)
    CHECK(rep.profile[3].extremal);
    CHECK_FALSE(rep.profile[4].extremal);
    CHECK(rep.profile[5].extremal);
    REQUIRE(rep.stutters.size() == 1);
    CHECK(rep.stutters[0] == std::make_pair(4L, 1L));  // length-1 stutter
}

TEST_CASE("cache round trip, cold misses, version policy") {
    std::string path = "test_cache_tmp.txt";
    std::remove(path.c_str());
    {
        ResultCache cache(path, "v1");
        CHECK_FALSE(cache.get("RL").has_value());
        cache.put(CacheRecord{"RL", "v1", Rational(0), Rational(0), true});
        auto rec = cache.get("RL");
        REQUIRE(rec.has_value());
        CHECK(rec->scl_value == 0);
        CHECK(rec->extremal);
    }
    {
        ResultCache cache(path, "v1");  // reload from disk
        REQUIRE(cache.get("RL").has_value());
    }
    {
        ResultCache cache(path, "v2");  // version bump ignores old records
        CHECK_FALSE(cache.get("RL").has_value());
        cache.put(CacheRecord{"RL", "v2", Rational(1, 2), Rational(0), false});
        CHECK(cache.get("RL")->scl_value == Rational(1, 2));
    }
    {
        ResultCache cache(path, "v2");
        long dropped = cache.compact();
        CHECK(dropped >= 1);  // the v1 line goes
        CHECK(cache.get("RL").has_value());
    }
    std::remove(path.c_str());
}

TEST_CASE("corrupt cache lines are skipped") {
    std::string path = "test_cache_corrupt.txt";
    {
        FILE* f = fopen(path.c_str(), "w");
        fputs("garbage line without separators\n", f);
        fputs("RL|v1|0|0|1|\n", f);
        fputs("RL2|v1|not_a_number|0|0|\n", f);
        fclose(f);
    }
    ResultCache cache(path, "v1");
    CHECK(cache.get("RL").has_value());
    CHECK_FALSE(cache.get("RL2").has_value());
    std::remove(path.c_str());
}

TEST_CASE("small histograms") {
    ExperimentConfig cfg;
    cfg.bound = 3;
    Histogram h1 = histogram(1, cfg);
    CHECK(h1.rows.size() == 2);  // R and L

    Histogram h2 = histogram(2, cfg);
    CHECK(h2.rows.size() == 4);
    // RL and LR give the same class but are counted per string
    CHECK(h2.rows[1].word == "RL");
    CHECK(h2.rows[2].word == "LR");
    CHECK(h2.rows[1].n == h2.rows[2].n);

    std::string csv = histogram_csv(h2);
    CHECK(csv.substr(0, 11) == "word,n_of_X");
    CHECK(histogram(2, cfg).rows.size() == 4);
    CHECK_THROWS_AS(histogram(13, cfg), SclError);
}

TEST_CASE("histogram determinism and worker invariance") {
    ExperimentConfig cfg;
    cfg.bound = 2;
    Histogram h1 = histogram(5, cfg);
    ExperimentConfig cfg4 = cfg;
    cfg4.workers = 4;
    Histogram h4 = histogram(5, cfg4);
    CHECK(histogram_csv(h1) == histogram_csv(h4));
    // warm-cache rerun is byte identical
    std::string path = "test_cache_hist.txt";
    std::remove(path.c_str());
    {
        ResultCache cache(path, "v1");
        ExperimentConfig cc = cfg;
        cc.cache = &cache;
        Histogram cold = histogram(5, cc);
        Histogram warm = histogram(5, cc);
        CHECK(histogram_csv(cold) == histogram_csv(warm));
        CHECK(histogram_csv(cold) == histogram_csv(h1));
    }
    std::remove(path.c_str());
}

TEST_CASE("svg is self contained") {
    ExperimentConfig cfg;
    cfg.bound = 2;
    Histogram h = histogram(2, cfg);
    std::string svg = histogram_svg(h);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);  // no external assets
}
