#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gfix/constructors.hpp"
#include "gfix/errors.hpp"
#include "gfix/maps.hpp"

using namespace gfix;

namespace {
const Space unit = Space::interval(0.0, 1.0);
const GMetric max_metric = from_metric_max(MetricFn::absolute(unit));
}  // namespace

TEST_CASE("weak commutativity") {
    const SampleSet samples = make_samples(unit);

    SUBCASE("a map weakly commutes with itself") {
        const SelfMap f = SelfMap::affine(unit, 0.5, 0.1, "f");
        const CheckReport r = check_weakly_commuting(max_metric, f, f, samples);
        CHECK(r.passed());
        CHECK(r.note.find("aliased") != std::string::npos);
    }
    SUBCASE("linear maps through zero commute") {
        const SelfMap a = SelfMap::affine(unit, 1.0 / 3.0, 0.0, "A");
        const SelfMap s = SelfMap::affine(unit, 1.0 / 9.0, 0.0, "S");
        CHECK(check_weakly_commuting(max_metric, s, a, samples).passed());
    }
    SUBCASE("x/2 against 1-x: holds at 0, fails on the grid scan") {
        const SelfMap f = SelfMap::affine(unit, 0.5, 0.0, "half");
        const SelfMap h = SelfMap::affine(unit, -1.0, 1.0, "flip");
        // At x = 0: G(fh0, hf0, hf0) = |0.5 - 1| = 0.5 <= G(f0, h0, h0) = 1.
        CHECK(max_metric(f(h(0.0)), h(f(0.0)), h(f(0.0))) == doctest::Approx(0.5));
        CHECK(max_metric(f(0.0), h(0.0), h(0.0)) == doctest::Approx(1.0));
        const CheckReport r = check_weakly_commuting(max_metric, f, h, samples);
        CHECK_FALSE(r.passed());
        // At x = 0.5 the left side is 1/2 against a right side of 1/4.
        bool found = false;
        for (const auto& v : r.violations)
            if (std::abs(v.witness[0] - 0.5) < 1e-12) {
                found = true;
                CHECK(v.lhs == doctest::Approx(0.5));
                CHECK(v.rhs == doctest::Approx(0.25));
            }
        CHECK(found);
    }
    SUBCASE("commuting table maps pass") {
        const Space sp = Space::finite({"a", "b", "c"});
        const SelfMap f = SelfMap::table(sp, {1, 2, 0}, "rot");
        const SelfMap h = SelfMap::table(sp, {2, 0, 1}, "rot2");  // rot^2, commutes
        const SampleSet fin = make_samples(sp);
        CHECK(check_weakly_commuting(discrete_gmetric(sp), f, h, fin).passed());
    }
}

TEST_CASE("range inclusion") {
    const SampleSet samples = make_samples(unit);

    SUBCASE("x/12 into x/3 via the affine preimage") {
        const SelfMap t = SelfMap::affine(unit, 1.0 / 12.0, 0.0, "T");
        const SelfMap a = SelfMap::affine(unit, 1.0 / 3.0, 0.0, "A");
        const CheckReport r = check_range_inclusion(t, a, samples);
        CHECK(r.passed());
        CHECK(r.checked > 0);
    }
    SUBCASE("reverse direction fails: x/3 is not inside x/12's image") {
        const SelfMap t = SelfMap::affine(unit, 1.0 / 12.0, 0.0, "T");
        const SelfMap a = SelfMap::affine(unit, 1.0 / 3.0, 0.0, "A");
        CHECK_FALSE(check_range_inclusion(a, t, samples).passed());
    }
    SUBCASE("identical maps pass trivially") {
        const SelfMap t = SelfMap::affine(unit, 0.25, 0.0, "T");
        CHECK(check_range_inclusion(t, t, samples).passed());
    }
    SUBCASE("disjoint constant images fail with a witness") {
        const Space sp = Space::finite({"a", "b"});
        const SelfMap f = SelfMap::constant(sp, sp.point(0), "to-a");
        const SelfMap h = SelfMap::constant(sp, sp.point(1), "to-b");
        const SampleSet fin = make_samples(sp);
        const CheckReport r = check_range_inclusion(f, h, fin);
        CHECK_FALSE(r.passed());
        REQUIRE(!r.violations.empty());
        CHECK(sp.describe(r.violations[0].witness[1]) == "a");
    }
    SUBCASE("oracle-less interval maps use sampled-image coverage") {
        const SelfMap t = SelfMap::custom(
            unit, [](Point x) { return x / 12.0; }, "T12");
        const SelfMap h = SelfMap::custom(
            unit, [](Point x) { return x / 3.0; }, "A3");
        const CheckReport r = check_range_inclusion(t, h, samples);
        CHECK(r.passed());
        CHECK(r.note.find("coverage") != std::string::npos);
        // Image of x/3+0.5 = [0.5, 0.83]; x/12 lands below it.
        const SelfMap above = SelfMap::custom(
            unit, [](Point x) { return x / 3.0 + 0.5; }, "shifted");
        CHECK_FALSE(check_range_inclusion(t, above, samples).passed());
    }
}

TEST_CASE("preimage solving") {
    SUBCASE("closed-form affine oracle") {
        const SelfMap a = SelfMap::affine(unit, 1.0 / 3.0, 0.0, "A");
        CHECK(preimage_solve(a, 1.0 / 12.0) == doctest::Approx(0.25));
        CHECK_THROWS_AS(preimage_solve(a, 0.9), NoPreimageError);  // 2.7 outside [0,1]
    }
    SUBCASE("identity") {
        const SelfMap id = SelfMap::identity(unit);
        CHECK(preimage_solve(id, 0.37) == doctest::Approx(0.37));
    }
    SUBCASE("finite table lookup") {
        const Space sp = Space::finite({"a", "b", "c"});
        const SelfMap m = SelfMap::table(sp, {1, 1, 0}, "m");
        CHECK(sp.describe(preimage_solve(m, sp.point(1))) == "a");
        CHECK(sp.describe(preimage_solve(m, sp.point(0))) == "c");
        CHECK_THROWS_AS(preimage_solve(m, sp.point(2)), NoPreimageError);
    }
    SUBCASE("bisection on a monotone oracle-less map") {
        const SelfMap m = SelfMap::custom(
            unit, [](Point x) { return 0.5 * x * x + 0.1; }, "quad");
        const Point x = preimage_solve(m, 0.3);
        CHECK(m(x) == doctest::Approx(0.3).epsilon(1e-8));
        CHECK_THROWS_AS(preimage_solve(m, 0.9), NoPreimageError);
    }
    SUBCASE("non-monotone maps without an oracle are a configuration error") {
        const SelfMap m = SelfMap::custom(
            unit, [](Point x) { return 4.0 * x * (1.0 - x) * 0.25; }, "bump");
        CHECK_THROWS_AS(preimage_solve(m, 0.1), ConfigError);
    }
    SUBCASE("apply after solve reproduces the target") {
        const SelfMap maps[] = {
            SelfMap::affine(unit, 0.4, 0.2, "aff"),
            SelfMap::identity(unit),
            SelfMap::custom(unit, [](Point x) { return 0.3 * x + 0.1 * x * x; }, "mix"),
        };
        SplitMix64 rng(7);
        for (const SelfMap& m : maps) {
            for (int i = 0; i < 50; ++i) {
                const Point t = m(rng.next_in(0.0, 1.0));  // guaranteed in the image
                const Point x = preimage_solve(m, t);
                CHECK(std::abs(m(x) - t) <= 2e-9);
            }
        }
    }
}

TEST_CASE("map construction guards") {
    CHECK_THROWS_AS(SelfMap::affine(unit, 1.5, 0.0, "grow"), InvalidConstruction);
    CHECK_THROWS_AS(SelfMap::constant(unit, 2.0), InvalidConstruction);
    CHECK_THROWS_AS(SelfMap::custom(unit, [](Point x) { return x + 0.6; }, "escape"),
                    InvalidConstruction);
    const Space sp = Space::finite({"a", "b"});
    CHECK_THROWS_AS(SelfMap::table(sp, {0}, "short"), ConfigError);
    CHECK_THROWS_AS(SelfMap::table(sp, {0, 5}, "oob"), ConfigError);

    MapSystem sys{SelfMap::identity(unit), SelfMap::identity(unit),
                  SelfMap::identity(sp), SelfMap::identity(unit)};
    CHECK_THROWS_AS(sys.validate(), ConfigError);
}

TEST_CASE("alias detection") {
    const SelfMap s = SelfMap::affine(unit, 0.25, 0.0, "S");
    const SelfMap t = s;  // shared implementation
    CHECK(s.aliases(t));
    const SelfMap u = SelfMap::affine(unit, 0.25, 0.0, "S");
    CHECK_FALSE(s.aliases(u));  // same formula, distinct object
}
