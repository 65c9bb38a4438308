#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affpow/polya.hpp"

using namespace affpow;

TEST_CASE("count_polya") {
    CHECK(count_polya(1, 1) == 1);
    CHECK(count_polya(2, 2) == 2);
    CHECK(count_polya(3, 3) == 5);
    CHECK_THROWS_AS(count_polya(4, 3), std::domain_error);
    CHECK_THROWS_AS(count_polya(0, 3), std::domain_error);
}

TEST_CASE("count matches enumeration") {
    for (unsigned long d = 1; d <= 8; ++d)
        for (std::size_t s = 1; s <= d; ++s)
            CHECK(count_polya(s, d) == static_cast<long>(enumerate_polya(s, d).size()));
}

TEST_CASE("diagonal counts are Catalan numbers") {
    for (std::size_t s = 1; s <= 10; ++s) {
        Int catalan = binomial(Int(static_cast<long>(2 * s)), s) / static_cast<long>(s + 1);
        CHECK(count_polya(s, static_cast<unsigned long>(s)) == catalan);
    }
}

TEST_CASE("enumerate_polya") {
    auto two = enumerate_polya(2, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].m == std::vector<unsigned long>{0, 2});
    CHECK(two[1].m == std::vector<unsigned long>{1, 1});

    for (unsigned long d = 2; d <= 6; ++d) CHECK(enumerate_polya(1, d).size() == d);

    for (const auto& t : enumerate_polya(3, 5)) {
        CHECK(t.total() == 3);
        CHECK(polya_check(t.to_sequence()));
    }
}

TEST_CASE("project_sequence") {
    CHECK(project_sequence(PolyaSequence({2, 2, 0})) == PolyaSequence({1, 1}));
    CHECK(project_sequence(PolyaSequence({3, 2, 1, 0})) == PolyaSequence({2, 1, 0}));
    CHECK_THROWS_AS(project_sequence(PolyaSequence({4})), PreconditionError);
    CHECK_THROWS_AS(project_sequence(PolyaSequence({0, 0})), PreconditionError);
}

TEST_CASE("project preserves the Polya condition") {
    for (const auto& t : enumerate_polya(4, 6)) {
        PolyaSequence e = t.to_sequence();
        if (e.exponents()[2] == 0) continue;  // decrement would go negative
        CHECK(polya_check(project_sequence(e)));
    }
}

TEST_CASE("clamp_sequence") {
    // already inside P'_s: unchanged
    PolyaSequence inside({5, 3, 1, 0});
    CHECK(clamp_sequence(inside, 4) == inside);

    PolyaSequence tall({100, 3, 2, 1});
    PolyaSequence clamped = clamp_sequence(tall, 4);
    CHECK(clamped.max_exponent() == 6);  // floor(16/2) - 2
    CHECK(polya_check(clamped));

    PolyaSequence s3({100, 2, 1});
    PolyaSequence c3 = clamp_sequence(s3, 3);
    CHECK(c3.max_exponent() <= 2);
    CHECK(polya_check(c3));

    CHECK_THROWS_AS(clamp_sequence(PolyaSequence({9, 0}), 2), PreconditionError);
    CHECK_THROWS_AS(clamp_sequence(PolyaSequence({1, 1, 1}), 4), PreconditionError);
}

TEST_CASE("clamp stays Polya across the s=4 enumeration") {
    for (const auto& t : enumerate_polya(4, 8)) {
        PolyaSequence e = t.to_sequence();
        std::size_t over = 0;
        for (auto v : e.exponents())
            if (v > 6) ++over;
        if (over > 3) {
            CHECK_THROWS_AS(clamp_sequence(e, 4), PreconditionError);
            continue;
        }
        PolyaSequence c = clamp_sequence(e, 4);
        CHECK(polya_check(c));
        CHECK(c.max_exponent() <= 6);
    }
}

TEST_CASE("dependent_max_exponent_bound") {
    Family dep({{Scalar(-1), 2}, {Scalar(1), 2}, {Scalar(0), 1}});
    CHECK(dependent_max_exponent_bound(dep));
    Family indep({{Scalar(0), 1}, {Scalar(1), 2}});
    CHECK_THROWS_AS(dependent_max_exponent_bound(indep), PreconditionError);
}

TEST_CASE("f_bound") {
    CHECK(f_bound(2) == 0);
    CHECK(f_bound(4) == 1980);
    CHECK_THROWS_AS(f_bound(1), std::domain_error);
    for (std::size_t s = 3; s <= 7; ++s) CHECK(f_bound(s + 1) > f_bound(s));
}

TEST_CASE("monte carlo with distinct exponents is always independent") {
    ExperimentConfig cfg{3, 20, 200, 7, 0};
    auto rep = monte_carlo_independence(PolyaSequence({3, 2, 1}), cfg);
    CHECK(rep.frequency == 1.0);
    CHECK(rep.pass);
}

TEST_CASE("equal exponents reduce to the birthday event") {
    // s = 2, e = (2,2): dependent iff the two shifts collide
    ExperimentConfig cfg{2, 10, 4000, 11, 0};
    auto rep = monte_carlo_independence(PolyaSequence({2, 2}), cfg);
    double birthday = 1.0 - 1.0 / 10.0;
    CHECK(rep.frequency == doctest::Approx(birthday).epsilon(0.05));
}

TEST_CASE("monte carlo respects the genericity bound across seeds") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        ExperimentConfig cfg{3, 100, 2000, seed, 0};
        auto rep = monte_carlo_independence(PolyaSequence({2, 2, 0}), cfg);
        CHECK(rep.bound == doctest::Approx(1.0 - 6.0 / 100.0));
        CHECK(rep.frequency >= rep.bound - 3.0 * rep.sigma);
        CHECK(rep.pass);
    }
}

TEST_CASE("monte carlo is reproducible for a fixed seed") {
    ExperimentConfig cfg{3, 50, 300, 99, 0};
    auto a = monte_carlo_independence(PolyaSequence({2, 2, 0}), cfg);
    auto b = monte_carlo_independence(PolyaSequence({2, 2, 0}), cfg);
    CHECK(a.frequency == b.frequency);
}

TEST_CASE("genericity sweep") {
    ExperimentConfig small{3, 10000, 60, 5, 0};
    auto rep = genericity_sweep(3, small);
    CHECK(rep.sequences == count_polya(3, 3));
    CHECK(rep.pass);

    // s = 2: P'_2 is empty under the floored convention, the event is vacuous
    ExperimentConfig tiny{2, 50, 50, 5, 0};
    auto rep2 = genericity_sweep(2, tiny);
    CHECK(rep2.sequences == 0);
    CHECK(rep2.frequency == 1.0);

    // f(4) = 1980 >= |S| = 100: flagged vacuous
    ExperimentConfig vac{4, 100, 10, 5, 0};
    CHECK(genericity_sweep(4, vac).vacuous);
}
