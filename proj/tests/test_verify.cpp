#include "bifc/verify.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace bifc;

TEST_CASE("every suite passes at small sizes") {
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        auto r = run_suite(name, 3, 1);
        CHECK(r.suite == name);
        CHECK(r.ok);
        CHECK(r.checks > 0);
        CHECK(r.counterexample.empty());
    }
    CHECK(suite_names().size() == 7);
    CHECK_THROWS_AS(run_suite("nope", 3, 1), std::invalid_argument);
}

TEST_CASE("suite results record the first failure") {
    SuiteResult r;
    r.check(true, "fine");
    r.check(false, "first");
    r.check(false, "second");
    CHECK_FALSE(r.ok);
    CHECK(r.checks == 3);
    CHECK(r.counterexample == "first");
}

TEST_CASE("random helpers are reproducible") {
    std::mt19937_64 a(5), b(5);
    for (int k = 0; k < 100; ++k) {
        Rational x = random_rational(a);
        CHECK(x == random_rational(b));
        CHECK(abs(x) <= 5);
        CHECK(x.get_den() <= 4);
    }
    CHECK(all_translucent_words(2).size() == 1 + 4 + 16);
}
