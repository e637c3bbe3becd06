#include <doctest.h>

#include <cmath>

#include "smanet/error.hpp"
#include "smanet/sim/metrics.hpp"
#include "smanet/sim/scenario.hpp"
#include "support.hpp"

using namespace smanet;
using namespace smanet::sim;

namespace {

SimNode static_node(NodeId id, double x, double y, bool altruistic = false) {
    SimNode n;
    n.state = protocol::NodeState(id, altruistic);
    n.pos = {x, y};
    return n;
}

}  // namespace

TEST_CASE("neighbors is boundary inclusive and symmetric") {
    auto h = test_support::confinfo_hierarchy();
    World w(100, 100, 10, 1);
    w.add_node(static_node(0, 0, 0));
    w.add_node(static_node(1, 10, 0));  // exactly at range
    w.add_node(static_node(2, 0, 21));
    CHECK(w.neighbors(0) == std::set<NodeId>{1});
    CHECK(w.neighbors(1) == std::set<NodeId>{0});
    CHECK(w.neighbors(2).empty());
    CHECK_THROWS_AS(w.neighbors(99), LookupError);
}

TEST_CASE("three collinear nodes spaced range+1 apart are isolated") {
    World w(100, 100, 10, 1);
    w.add_node(static_node(0, 0, 0));
    w.add_node(static_node(1, 11, 0));
    w.add_node(static_node(2, 22, 0));
    for (NodeId id : {0u, 1u, 2u}) CHECK(w.neighbors(id).empty());
}

TEST_CASE("move is the identity for an all-static world") {
    World w(100, 100, 10, 1);
    w.add_node(static_node(0, 3, 4));
    w.add_node(static_node(1, 50, 60));
    w.move();
    CHECK(w.node(0).pos.x == 3);
    CHECK(w.node(0).pos.y == 4);
    CHECK(w.node(1).pos.x == 50);
}

TEST_CASE("a node advances toward its waypoint by its speed") {
    World w(100, 100, 10, 1);
    SimNode n = static_node(0, 0, 0);
    n.mobility.model = MobilityModel::RandomWaypoint;
    n.mobility.speed_min = 3;
    n.mobility.speed_max = 3;
    n.ms.has_waypoint = true;
    n.ms.waypoint = {10, 0};
    n.ms.speed = 3;
    w.add_node(std::move(n));
    w.move();
    CHECK(w.node(0).pos.x == doctest::Approx(3.0));
    CHECK(w.node(0).pos.y == doctest::Approx(0.0));
}

TEST_CASE("random-waypoint trajectories are reproducible and in-bounds") {
    auto make = [] {
        World w(50, 40, 10, 777);
        for (NodeId id = 0; id < 5; ++id) {
            SimNode n = static_node(id, 25, 20);
            n.mobility.model = MobilityModel::RandomWaypoint;
            n.mobility.speed_min = 1;
            n.mobility.speed_max = 4;
            n.mobility.pause_steps = 2;
            w.add_node(std::move(n));
        }
        return w;
    };
    World a = make();
    World b = make();
    for (int i = 0; i < 200; ++i) {
        a.move();
        b.move();
        for (NodeId id = 0; id < 5; ++id) {
            CHECK(a.node(id).pos.x == b.node(id).pos.x);
            CHECK(a.node(id).pos.y == b.node(id).pos.y);
            CHECK(a.node(id).pos.x >= 0);
            CHECK(a.node(id).pos.x <= 50);
            CHECK(a.node(id).pos.y >= 0);
            CHECK(a.node(id).pos.y <= 40);
        }
    }
}

TEST_CASE("a shuttle ping-pongs over its waypoints") {
    World w(300, 100, 10, 1);
    SimNode n = static_node(0, 0, 50);
    n.mobility.model = MobilityModel::Shuttle;
    n.mobility.speed = 100;
    n.mobility.waypoints = {{200, 50}, {0, 50}};
    w.add_node(std::move(n));
    w.move();
    CHECK(w.node(0).pos.x == doctest::Approx(100));
    w.move();  // arrives at (200,50)
    CHECK(w.node(0).pos.x == doctest::Approx(200));
    w.move();  // heads back
    CHECK(w.node(0).pos.x == doctest::Approx(100));
}

TEST_CASE("an isolated node only emits a beacon in an exchange round") {
    auto h = test_support::confinfo_hierarchy();
    World w(100, 100, 5, 1);
    SimNode n = static_node(0, 0, 0);
    n.state.subscribe("guest", h);
    n.state.publish("guest", "x", 0, h);
    w.add_node(std::move(n));
    w.exchange_round(h);
    CHECK(w.beacon_count() == 1);
    CHECK(w.transfer_count() == 0);
    CHECK(w.node(0).state.store().size() == 1);
}

TEST_CASE("one round moves a publication to an adjacent subscriber") {
    auto h = test_support::confinfo_hierarchy();
    World w(100, 100, 10, 1);
    SimNode a = static_node(0, 0, 0);
    a.state.publish("guest", "hello", 0, h);
    SimNode b = static_node(1, 5, 0);
    b.state.subscribe("guest", h);
    w.add_node(std::move(a));
    w.add_node(std::move(b));
    w.exchange_round(h);
    CHECK(w.node(1).state.store().size() == 1);
    CHECK(w.transfer_count() == 1);
}

TEST_CASE("holdings advertised in beacons suppress re-sends") {
    auto h = test_support::confinfo_hierarchy();
    World w(100, 100, 10, 1);
    SimNode a = static_node(0, 0, 0);
    auto p = a.state.publish("guest", "hello", 0, h);
    SimNode b = static_node(1, 5, 0);
    b.state.subscribe("guest", h);
    size_t dropped = 0;
    b.state.accept_transfer({a.state.store().at(p.id)}, h, dropped);
    w.add_node(std::move(a));
    w.add_node(std::move(b));
    w.exchange_round(h);
    CHECK(w.transfer_count() == 0);
}

TEST_CASE("step only advances the counter in an empty static world") {
    auto h = test_support::confinfo_hierarchy();
    World w(100, 100, 5, 1);
    w.add_node(static_node(0, 0, 0));
    w.add_node(static_node(1, 90, 90));
    w.step(h);
    CHECK(w.current_step() == 1);
    CHECK(w.transfer_count() == 0);
    CHECK(w.node(0).state.store().empty());
}

TEST_CASE("a chain floods one hop per round") {
    auto h = test_support::confinfo_hierarchy();
    World w(500, 100, 10, 1);
    for (NodeId id = 0; id < 5; ++id) {
        SimNode n = static_node(id, id * 10.0, 0);
        n.state.subscribe("guest", h);
        w.add_node(std::move(n));
    }
    w.schedule({0, 0, "guest", "wave"});
    for (int i = 0; i < 6; ++i) w.step(h);

    // node 4 first holds the publication at step 4
    std::map<NodeId, uint64_t> first_seen;
    for (const auto& r : w.receipts())
        if (!first_seen.count(r.receiver)) first_seen[r.receiver] = r.step;
    REQUIRE(first_seen.size() == 4);
    CHECK(first_seen[1] == 1);
    CHECK(first_seen[2] == 2);
    CHECK(first_seen[3] == 3);
    CHECK(first_seen[4] == 4);
}

TEST_CASE("receipts are unique per publication and receiver") {
    auto h = test_support::confinfo_hierarchy();
    World w(100, 100, 50, 1);
    for (NodeId id = 0; id < 4; ++id) {
        SimNode n = static_node(id, id * 5.0, 0);
        n.state.subscribe("participant", h);
        w.add_node(std::move(n));
    }
    w.schedule({0, 1, "speaker", "x"});
    for (int i = 0; i < 10; ++i) w.step(h);
    std::set<std::pair<PubId, NodeId>> seen;
    for (const auto& r : w.receipts())
        CHECK(seen.emplace(r.pub, r.receiver).second);
}

TEST_CASE("scenario publications on unknown nodes or topics fail at load") {
    auto h = test_support::confinfo_hierarchy();
    ScenarioConfig s;
    s.seed = 1;
    s.steps = 5;
    s.width = s.height = 100;
    s.radio_range = 10;
    s.nodes.push_back({0, false, {"guest"}, Vec2{1, 1}, {}});
    s.publications.push_back({0, 7, "nosuch", "x"});
    try {
        validate_scenario(s, h);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        CHECK(msg.find("unknown node 7") != std::string::npos);
        CHECK(msg.find("unknown topic 'nosuch'") != std::string::npos);
    }
}

TEST_CASE("scenario validation collects every violation") {
    auto h = test_support::confinfo_hierarchy();
    ScenarioConfig s;
    s.seed = 1;
    s.steps = 5;
    s.width = s.height = 100;
    s.radio_range = 10;
    s.nodes.push_back({0, false, {"bad_code"}, Vec2{500, 1}, {}});
    s.nodes.push_back({0, false, {}, std::nullopt, {}});
    try {
        validate_scenario(s, h);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        CHECK(msg.find("duplicate node 0") != std::string::npos);
        CHECK(msg.find("unknown subscription 'bad_code'") != std::string::npos);
        CHECK(msg.find("position out of bounds") != std::string::npos);
    }
}

TEST_CASE("zero-step runs deliver nothing") {
    auto h = test_support::confinfo_hierarchy();
    ScenarioConfig s;
    s.seed = 1;
    s.steps = 0;
    s.width = s.height = 100;
    s.radio_range = 100;
    s.nodes.push_back({0, false, {}, Vec2{0, 0}, {}});
    s.nodes.push_back({1, false, {"guest"}, Vec2{1, 0}, {}});
    s.publications.push_back({0, 0, "guest", "x"});
    World w = run_world(s, h);
    auto r = compute_metrics(w, h);
    REQUIRE(r.publications.size() == 1);  // scheduled, never injected
    CHECK(r.publications[0].subscriber_count == 1);
    CHECK(r.publications[0].delivery_ratio == 0.0);
    CHECK(w.receipts().empty());
}

TEST_CASE("a fully connected clique delivers in one round with latency 1") {
    auto h = test_support::confinfo_hierarchy();
    ScenarioConfig s;
    s.seed = 1;
    s.steps = 3;
    s.width = s.height = 100;
    s.radio_range = 200;
    for (NodeId id = 0; id < 6; ++id)
        s.nodes.push_back(
            {id, false, {"participant"}, Vec2{id * 10.0, 0}, {}});
    s.publications.push_back({0, 0, "speaker", "x"});
    World w = run_world(s, h);
    auto r = compute_metrics(w, h);
    REQUIRE(r.publications.size() == 1);
    CHECK(r.publications[0].subscriber_count == 5);
    CHECK(r.publications[0].reached == 5);
    CHECK(r.publications[0].delivery_ratio == 1.0);
    REQUIRE(r.publications[0].latencies.size() == 5);
    for (auto lat : r.publications[0].latencies) CHECK(lat == 1);
    CHECK(r.mean_delivery_ratio == 1.0);
}

TEST_CASE("delivery ratio is 1.0 when the subscriber set is empty") {
    auto h = test_support::confinfo_hierarchy();
    ScenarioConfig s;
    s.seed = 1;
    s.steps = 2;
    s.width = s.height = 100;
    s.radio_range = 100;
    s.nodes.push_back({0, false, {}, Vec2{0, 0}, {}});
    s.nodes.push_back({1, true, {}, Vec2{1, 0}, {}});  // altruist, not a target
    s.publications.push_back({0, 0, "guest", "x"});
    auto r = compute_metrics(run_world(s, h), h);
    REQUIRE(r.publications.size() == 1);
    CHECK(r.publications[0].subscriber_count == 0);
    CHECK(r.publications[0].delivery_ratio == 1.0);
}

TEST_CASE("metrics serialization is deterministic") {
    auto h = test_support::confinfo_hierarchy();
    auto scenario = load_scenario(test_support::fixture_dir() /
                                  "scenarios/ferry_altruistic.json");
    auto hierarchy =
        load_scenario_hierarchy(scenario, test_support::fixture_dir() / "scenarios");
    std::string a = metrics_to_json(compute_metrics(
        run_world(scenario, hierarchy), hierarchy));
    std::string b = metrics_to_json(compute_metrics(
        run_world(scenario, hierarchy), hierarchy));
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("conservation: reached equals distinct receipt events") {
    auto h = test_support::confinfo_hierarchy();
    auto scenario =
        load_scenario(test_support::fixture_dir() / "scenarios/mobility.json");
    auto hierarchy = load_scenario_hierarchy(
        scenario, test_support::fixture_dir() / "scenarios");
    World w = run_world(scenario, hierarchy);
    auto r = compute_metrics(w, hierarchy);
    for (const auto& pm : r.publications) {
        size_t events = 0;
        for (const auto& rc : w.receipts())
            if (rc.pub == pm.id) ++events;
        CHECK(pm.reached == events);
        CHECK(pm.reached <= pm.subscriber_count);
    }
}
