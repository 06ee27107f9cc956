#include <doctest.h>

#include <random>
#include <set>

#include "pltr/pltr.hpp"
#include "pltr/schedule_build.hpp"
#include "test_helpers.hpp"

using namespace pltr;

TEST_CASE("expand_interval worked examples") {
    SUBCASE("full grid") {
        IntervalAssignment a{{0, 2, 0, 2}, {{"a", 2}, {"b", 2}}};
        auto columns = expand_interval(a);
        REQUIRE(columns.size() == 2);
        CHECK(columns[0] == std::vector<std::string>{"a", "b"});
        CHECK(columns[1] == std::vector<std::string>{"a", "b"});
    }
    SUBCASE("partial row spreads left to right") {
        IntervalAssignment a{{0, 3, 0, 1}, {{"a", 2}}};
        auto columns = expand_interval(a);
        REQUIRE(columns.size() == 3);
        CHECK(columns[0] == std::vector<std::string>{"a"});
        CHECK(columns[1] == std::vector<std::string>{"a"});
        CHECK(columns[2].empty());
    }
    SUBCASE("column counts differ by at most one") {
        IntervalAssignment a{{0, 2, 0, 2}, {{"a", 2}, {"b", 1}}};
        auto columns = expand_interval(a);
        CHECK(columns[0].size() == 2);
        CHECK(columns[1].size() == 1);
    }
    SUBCASE("volume outside the interval bounds is rejected") {
        IntervalAssignment a{{0, 2, 2, 2}, {{"a", 1}}};
        CHECK_THROWS_WITH(expand_interval(a), "interval volume outside bounds");
    }
}

TEST_CASE("realize on fixture A puts the job in the kept-busy slots") {
    Instance a = testutil::fixture_a();
    PltrResult result = run(a);
    Schedule schedule = realize(a, result.final_bounds);
    CHECK(schedule.volume_at(0) == 0);
    CHECK(schedule.volume_at(3) == 1);
    CHECK(schedule.volume_at(4) == 1);
    CHECK(schedule.slots[3][0] == std::pair<int, std::string>{1, "j1"});
    CHECK(check_valid(schedule, a, &result.final_bounds).ok());
    CHECK(check_stair(schedule));
}

TEST_CASE("realize on fixture B fills both processors in both slots") {
    Instance b = testutil::fixture_b();
    PltrResult result = run(b);
    Schedule schedule = realize(b, result.final_bounds);
    for (int t : {0, 1}) {
        CHECK(schedule.volume_at(t) == 2);
        std::set<std::string> jobs;
        for (const auto& [k, id] : schedule.slots[static_cast<std::size_t>(t)])
            jobs.insert(id);
        CHECK(jobs == std::set<std::string>{"j1", "j2"});
    }
    CHECK(check_stair(schedule));
}

TEST_CASE("realize on an empty instance") {
    Instance none;
    none.m = 3;
    Schedule schedule = realize(none, BoundProfile());
    CHECK(schedule.horizon == 0);
    CHECK(compute_cost(schedule, 5).total == 0);
}

TEST_CASE("schedule_from_result costs on the fixtures") {
    auto [schedule_a, cost_a] =
        schedule_from_result(testutil::fixture_a(), run(testutil::fixture_a()));
    CHECK(cost_a.total == 4);

    auto [schedule_b, cost_b] =
        schedule_from_result(testutil::fixture_b(), run(testutil::fixture_b()));
    CHECK(cost_b.total == 6);
}

TEST_CASE("realized schedules respect bounds, stair, and column balance") {
    std::mt19937_64 rng(23);
    int solved = 0;
    for (int trial = 0; trial < 80 && solved < 30; ++trial) {
        Instance instance = testutil::random_instance(rng, 5, 12, 3, 2);
        PltrResult result;
        try {
            result = run(instance);
        } catch (const InfeasibleError&) {
            continue;
        }
        ++solved;
        Schedule schedule = realize(instance, result.final_bounds);
        CHECK(check_valid(schedule, instance, &result.final_bounds).ok());
        CHECK(check_stair(schedule));

        // within each elementary interval the per-slot counts differ by <= 1
        FlowNetwork net = build_network(instance, result.final_bounds, true);
        for (const auto& interval : net.intervals) {
            int lo = instance.m + 1;
            int hi = -1;
            for (int t = interval.begin; t < interval.end; ++t) {
                lo = std::min(lo, schedule.volume_at(t));
                hi = std::max(hi, schedule.volume_at(t));
            }
            CHECK(hi - lo <= 1);
        }
    }
    CHECK(solved == 30);
}
