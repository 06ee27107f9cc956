#include <doctest.h>

#include <random>

#include "pltr/flow.hpp"
#include "test_helpers.hpp"

using namespace pltr;

TEST_CASE("compressed network collapses fixture A to one time node") {
    Instance a = testutil::fixture_a();
    FlowNetwork net = build_network(a, BoundProfile::uniform(5, 0, 1), true);
    REQUIRE(net.intervals.size() == 1);
    CHECK(net.intervals[0].begin == 0);
    CHECK(net.intervals[0].end == 5);
}

TEST_CASE("per-slot network node count on fixture B") {
    Instance b = testutil::fixture_b();
    FlowNetwork net = build_network(b, testutil::default_bounds(b), false);
    CHECK(net.intervals.size() == 2);
    CHECK(net.job_count == 2);
    // jobs + time slots + source + relief + sink
    CHECK(net.node_count() == 7);
}

TEST_CASE("capacity into the sink equals P") {
    for (Instance instance : {testutil::fixture_a(), testutil::fixture_b()}) {
        BoundProfile bounds = testutil::default_bounds(instance);
        bounds.raise_lower(0, 1, 1);
        FlowNetwork net = build_network(instance, bounds, true);
        long long into_sink = 0;
        for (const auto& edges : net.adj)
            for (const auto& e : edges)
                if (e.to == net.sink()) into_sink += e.cap;
        CHECK(into_sink == instance.total_volume());
    }
}

TEST_CASE("lower bounds above the total volume are rejected") {
    Instance solo;
    solo.m = 8;
    solo.jobs = {{"j1", 0, 4, 2}};
    BoundProfile bounds = BoundProfile::uniform(5, 7, 8);
    CHECK_THROWS_WITH(build_network(solo, bounds, true),
                      "lower bounds exceed total volume");
    FeasibilityResult verdict = check_feasible(solo, bounds);
    REQUIRE_FALSE(verdict.feasible);
    CHECK(verdict.certificate->kind == CutCertificate::Kind::Excess);
    CHECK(verdict.certificate->witness == full_slot_set(5));
}

TEST_CASE("max flow values on the fixtures") {
    Instance a = testutil::fixture_a();
    FlowNetwork net_a = build_network(a, BoundProfile::uniform(5, 0, 1), true);
    CHECK(max_flow(net_a).value == 2);

    Instance inf = testutil::fixture_inf();
    FlowNetwork net_inf = build_network(inf, BoundProfile::uniform(2, 0, 1), true);
    CHECK(max_flow(net_inf).value == 2);  // < P = 3

    Instance none;
    none.m = 1;
    FlowNetwork net_none = build_network(none, BoundProfile::uniform(3, 0, 1), true);
    CHECK(max_flow(net_none).value == 0);
}

TEST_CASE("is_feasible on the fixtures") {
    CHECK(is_feasible(testutil::fixture_a(), BoundProfile::uniform(5, 0, 1)));
    CHECK_FALSE(is_feasible(testutil::fixture_inf(), BoundProfile::uniform(2, 0, 1)));
    CHECK(is_feasible(testutil::fixture_b(), BoundProfile::uniform(2, 2, 2)));
}

TEST_CASE("certificates carry independently positive witnesses") {
    SUBCASE("fixture INF: deficiency on both slots") {
        Instance inf = testutil::fixture_inf();
        BoundProfile bounds = BoundProfile::uniform(2, 0, 1);
        FeasibilityResult verdict = check_feasible(inf, bounds);
        REQUIRE_FALSE(verdict.feasible);
        CHECK(verdict.certificate->kind == CutCertificate::Kind::Deficiency);
        CHECK(verdict.certificate->witness == SlotSet{0, 1});
        CHECK(verdict.certificate->value == 1);
        CHECK(deficiency(inf, bounds, verdict.certificate->witness) == 1);
    }
    SUBCASE("jobless slot with a lower bound: excess") {
        Instance none;
        none.m = 1;
        BoundProfile bounds = BoundProfile::uniform(1, 1, 1);
        FeasibilityResult verdict = check_feasible(none, bounds);
        REQUIRE_FALSE(verdict.feasible);
        CHECK(verdict.certificate->kind == CutCertificate::Kind::Excess);
        CHECK(verdict.certificate->witness == SlotSet{0});
        CHECK(verdict.certificate->value == 1);
    }
    SUBCASE("fixture B squeezed at slot 0") {
        Instance b = testutil::fixture_b();
        BoundProfile bounds = BoundProfile::uniform(2, 0, 2);
        bounds.clamp_upper(0, 1, 1);
        FeasibilityResult verdict = check_feasible(b, bounds);
        REQUIRE_FALSE(verdict.feasible);
        CHECK(verdict.certificate->kind == CutCertificate::Kind::Deficiency);
        CHECK(verdict.certificate->witness == SlotSet{0, 1});
        CHECK(verdict.certificate->value == 1);
    }
}

TEST_CASE("compressed and per-slot networks agree") {
    CHECK(equivalent_networks_check(testutil::fixture_a(),
                                    testutil::default_bounds(testutil::fixture_a())));
    CHECK(equivalent_networks_check(testutil::fixture_b(),
                                    testutil::default_bounds(testutil::fixture_b())));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Instance instance = testutil::random_instance(rng, 5, 11, 3, 2);
        BoundProfile bounds =
            testutil::random_bounds(rng, instance.horizon_size(), instance.m);
        // sum l_t > P is short-circuited before any network is built
        if (bounds.sum_lower() > instance.total_volume()) continue;
        CHECK(equivalent_networks_check(instance, bounds));
    }
}

TEST_CASE("max flow value never exceeds P") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        Instance instance = testutil::random_instance(rng, 4, 9, 2, 1);
        FlowNetwork net =
            build_network(instance, testutil::default_bounds(instance), true);
        CHECK(max_flow(net).value <= instance.total_volume());
    }
}

TEST_CASE("a saturating flow saturates every lower-bound edge") {
    Instance b = testutil::fixture_b();
    BoundProfile bounds = BoundProfile::uniform(2, 2, 2);
    FlowNetwork net = build_network(b, bounds, true);
    REQUIRE(max_flow(net).value == 4);
    for (const auto& edges : net.adj)
        for (const auto& e : edges)
            if (e.to == net.sink() && e.cap > 0) CHECK(e.flow == e.cap);
}
