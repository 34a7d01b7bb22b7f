#include "polc/errors.hpp"
#include "polc/laws.hpp"

#include <doctest.h>

using namespace polc;

TEST_CASE("every law suite passes") {
    for (const auto& suite : law_suites()) {
        CAPTURE(suite);
        LawSuiteReport r = run_laws(suite, 1, 100);
        CHECK(r.cases > 0);
        for (const auto& f : r.failures) MESSAGE(f.law << ": " << f.reproduction);
        CHECK(r.failures.empty());
    }
}

TEST_CASE("law runs are deterministic") {
    LawSuiteReport a = run_laws("forest", 5, 50), b = run_laws("forest", 5, 50);
    CHECK(a.cases == b.cases);
    CHECK(a.notes == b.notes);
    CHECK_THROWS_AS(run_laws("nope", 1, 1), InputError);
}
