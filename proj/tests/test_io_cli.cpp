#include <doctest.h>

#include <cstdlib>
#include <string>

#include "pltr/gantt.hpp"
#include "pltr/io.hpp"
#include "pltr/pltr.hpp"
#include "pltr/schedule_build.hpp"
#include "test_helpers.hpp"

using namespace pltr;

namespace {

std::string fixture(const std::string& name) {
    return std::string(PLTR_FIXTURE_DIR) + "/" + name;
}

int run_cli(const std::string& args) {
    std::string command =
        std::string(PLTR_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("instance JSON round-trips canonically") {
    std::string text = io::read_file(fixture("fixture_a.json"));
    Instance instance = io::parse_instance(text);
    CHECK(io::instance_to_json(instance) == text);
    // a second pass is byte-stable
    CHECK(io::instance_to_json(io::parse_instance(io::instance_to_json(instance))) ==
          io::instance_to_json(instance));
}

TEST_CASE("offsets survive a round trip") {
    std::string text = R"({"m":1,"q":0,"jobs":[
        {"id":"j1","release":5,"deadline":9,"volume":2}]})";
    Instance instance = io::parse_instance(text);
    CHECK(instance.offset == 5);
    CHECK(instance.jobs[0].release == 0);
    CHECK(io::instance_to_json(instance).find("\"release\": 5") !=
          std::string::npos);
}

TEST_CASE("schedule JSON matches the wire format") {
    Instance a = testutil::fixture_a();
    auto [schedule, cost] = schedule_from_result(a, run(a));
    std::string text = io::schedule_to_json(schedule, cost, a.q);
    io::ParsedSchedule parsed = io::parse_schedule(text);
    CHECK(parsed.q == 2);
    CHECK(parsed.schedule.volume_at(3) == 1);
    CHECK(parsed.schedule.volume_at(4) == 1);
    CHECK(text.find("\"total\": 4") != std::string::npos);
}

TEST_CASE("bounds JSON rejects inconsistent segments") {
    CHECK_THROWS_WITH(
        io::parse_bounds(R"({"segments":[{"begin":0,"end":2,"lower":3,"upper":1}]})"),
        "bound segment with l > m or negative lower");
    CHECK_THROWS_WITH(
        io::parse_bounds(R"({"segments":[{"begin":1,"end":2,"lower":0,"upper":1}]})"),
        "bound segments must tile the horizon without gaps");
    BoundProfile bounds = io::parse_bounds(
        R"({"segments":[{"begin":0,"end":2,"lower":0,"upper":2},
                        {"begin":2,"end":4,"lower":1,"upper":1}]})");
    CHECK(bounds.upper_at(0) == 2);
    CHECK(bounds.lower_at(3) == 1);
    CHECK(io::parse_bounds(io::bounds_to_json(bounds)).segments().size() ==
          bounds.segments().size());
}

TEST_CASE("gantt SVG contains a block per busy slot") {
    Instance a = testutil::fixture_a();
    auto [schedule, cost] = schedule_from_result(a, run(a));
    std::string svg = render_gantt_svg(schedule, a.q);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find(">j1<") != std::string::npos);
    CHECK(svg.find("url(#powerup)") != std::string::npos);

    std::string empty_svg = render_gantt_svg(Schedule::empty_over(0), 1);
    CHECK(empty_svg.find("<svg") == 0);
}

TEST_CASE("CLI exit-code contract") {
    CHECK(run_cli("solve " + fixture("fixture_a.json")) == 0);
    CHECK(run_cli("solve " + fixture("fixture_b.json")) == 0);
    CHECK(run_cli("solve " + fixture("fixture_inf.json")) == 2);
    CHECK(run_cli("check " + fixture("fixture_b.json")) == 0);
    CHECK(run_cli("check " + fixture("fixture_inf.json")) == 2);
    CHECK(run_cli("solve /nonexistent.json") == 1);
    CHECK(run_cli("oracle " + fixture("fixture_a.json")) == 0);
    CHECK(run_cli("compare " + fixture("fixture_a.json")) == 0);
    CHECK(run_cli("compare --trials 0") == 0);
}

TEST_CASE("CLI solve emits schedule and gantt artifacts") {
    std::string schedule_path = "/tmp/pltr_test_schedule.json";
    std::string svg_path = "/tmp/pltr_test_gantt.svg";
    REQUIRE(run_cli("solve " + fixture("fixture_a.json") + " --schedule-out " +
                    schedule_path + " --gantt-out " + svg_path) == 0);
    io::ParsedSchedule parsed = io::load_schedule(schedule_path);
    CHECK(parsed.schedule.volume_at(3) == 1);
    CHECK(io::read_file(svg_path).find("<svg") == 0);
    CHECK(run_cli("gantt " + schedule_path + " " + svg_path) == 0);
}
