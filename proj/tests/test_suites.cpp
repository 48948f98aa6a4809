#include <doctest.h>

#include "modcalc/propsuite.hpp"
#include "modcalc/errors.hpp"

using namespace modcalc;

TEST_CASE("every registered suite runs clean on a smoke budget") {
    for (const auto& name : property_suite_names()) {
        SuiteResult r = run_property_suite(name, 2024, 10);
        INFO(name << ": " << r.detail);
        CHECK(r.failures == 0);
    }
}

TEST_CASE("suites are deterministic in the seed") {
    SuiteResult a = run_property_suite("schouten", 5, 15);
    SuiteResult b = run_property_suite("schouten", 5, 15);
    CHECK(a.failures == b.failures);
    CHECK(a.detail == b.detail);
}

TEST_CASE("unknown suite name") {
    CHECK_THROWS_AS(run_property_suite("no_such_suite", 1, 1), UnknownCheckName);
}
