#include "smanet/sim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "smanet/dsl/parser.hpp"
#include "smanet/dsl/validate.hpp"
#include "smanet/error.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace smanet::sim {

namespace {

MobilitySpec parse_mobility(const json& j) {
    MobilitySpec m;
    std::string model = j.value("model", "static");
    if (model == "static") {
        m.model = MobilityModel::Static;
    } else if (model == "random_waypoint") {
        m.model = MobilityModel::RandomWaypoint;
        m.speed_min = j.value("speed_min", 0.0);
        m.speed_max = j.value("speed_max", 0.0);
        m.pause_steps = j.value("pause_steps", 0ull);
    } else if (model == "shuttle") {
        m.model = MobilityModel::Shuttle;
        m.speed = j.value("speed", 0.0);
        for (const auto& wp : j.value("waypoints", json::array()))
            m.waypoints.push_back(
                {wp.at("x").get<double>(), wp.at("y").get<double>()});
    } else {
        throw ConfigError("unknown mobility model '" + model + "'");
    }
    return m;
}

}  // namespace

ScenarioConfig load_scenario(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read scenario " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("scenario " + path.string() + ": " + e.what());
    }
    try {
        ScenarioConfig s;
        s.seed = j.at("seed").get<uint32_t>();
        s.steps = j.at("steps").get<uint64_t>();
        s.width = j.at("area").at("width").get<double>();
        s.height = j.at("area").at("height").get<double>();
        s.radio_range = j.at("radio_range").get<double>();
        s.hierarchy_path = j.at("hierarchy").get<std::string>();
        for (const auto& n : j.at("nodes")) {
            ScenarioNode node;
            node.id = n.at("id").get<NodeId>();
            node.altruistic = n.value("altruistic", false);
            for (const auto& code : n.value("subscriptions", json::array()))
                node.subscriptions.push_back(code.get<std::string>());
            if (n.contains("position"))
                node.position = Vec2{n["position"].at("x").get<double>(),
                                     n["position"].at("y").get<double>()};
            if (n.contains("mobility")) node.mobility = parse_mobility(n["mobility"]);
            s.nodes.push_back(std::move(node));
        }
        for (const auto& p : j.value("publications", json::array())) {
            s.publications.push_back({p.at("step").get<uint64_t>(),
                                      p.at("node").get<NodeId>(),
                                      p.at("topic").get<std::string>(),
                                      p.value("payload", std::string())});
        }
        return s;
    } catch (const json::exception& e) {
        throw ConfigError("scenario " + path.string() + ": " + e.what());
    }
}

topic::TopicHierarchy load_scenario_hierarchy(const ScenarioConfig& scenario,
                                              const fs::path& base_dir) {
    fs::path sm_path = scenario.hierarchy_path;
    if (sm_path.is_relative()) sm_path = base_dir / sm_path;
    std::ifstream in(sm_path, std::ios::binary);
    if (!in) throw IoError("cannot read hierarchy " + sm_path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    auto parsed = dsl::parse(buf.str());
    if (!parsed.ok())
        throw ConfigError("hierarchy " + sm_path.string() +
                          " does not parse: " +
                          parsed.diagnostics.front().message);
    auto diags = dsl::validate(*parsed.model, dsl::ValidationMode::Permissive);
    if (dsl::has_errors(diags))
        throw ConfigError("hierarchy " + sm_path.string() +
                          " is invalid: " + diags.front().message);
    return topic::TopicHierarchy::build(*parsed.model);
}

void validate_scenario(const ScenarioConfig& s, const topic::TopicHierarchy& h) {
    std::vector<std::string> problems;
    if (s.width <= 0 || s.height <= 0)
        problems.push_back("area dimensions must be positive");
    if (s.radio_range < 0) problems.push_back("radio_range must be >= 0");

    std::set<NodeId> ids;
    for (const auto& n : s.nodes) {
        std::string who = "node " + std::to_string(n.id);
        if (!ids.insert(n.id).second)
            problems.push_back("duplicate " + who);
        for (const auto& code : n.subscriptions)
            if (!h.contains(code))
                problems.push_back(who + ": unknown subscription '" + code + "'");
        if (n.position && (n.position->x < 0 || n.position->x > s.width ||
                           n.position->y < 0 || n.position->y > s.height))
            problems.push_back(who + ": position out of bounds");
        const auto& m = n.mobility;
        if (m.model == MobilityModel::RandomWaypoint &&
            !(0 < m.speed_min && m.speed_min <= m.speed_max))
            problems.push_back(who + ": need 0 < speed_min <= speed_max");
        if (m.model == MobilityModel::Shuttle) {
            if (m.waypoints.size() < 2 || m.speed <= 0)
                problems.push_back(who +
                                   ": shuttle needs >= 2 waypoints and speed > 0");
            for (const auto& wp : m.waypoints)
                if (wp.x < 0 || wp.x > s.width || wp.y < 0 || wp.y > s.height)
                    problems.push_back(who + ": waypoint out of bounds");
        }
    }
    for (const auto& p : s.publications) {
        if (!ids.count(p.node))
            problems.push_back("publication at step " + std::to_string(p.step) +
                               ": unknown node " + std::to_string(p.node));
        if (!h.contains(p.topic))
            problems.push_back("publication at step " + std::to_string(p.step) +
                               ": unknown topic '" + p.topic + "'");
    }
    if (!problems.empty()) {
        std::string msg = "invalid scenario:";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw ConfigError(msg);
    }
}

World build_world(const ScenarioConfig& s, const topic::TopicHierarchy& h) {
    validate_scenario(s, h);
    World w(s.width, s.height, s.radio_range, s.seed);
    for (const auto& n : s.nodes) {
        SimNode sn;
        sn.state = protocol::NodeState(n.id, n.altruistic);
        for (const auto& code : n.subscriptions) sn.state.subscribe(code, h);
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        sn.pos = n.position ? *n.position : Vec2{nan, nan};
        sn.mobility = n.mobility;
        w.add_node(std::move(sn));
    }
    w.place_unpositioned();
    for (const auto& p : s.publications) w.schedule(p);
    return w;
}

World run_world(const ScenarioConfig& s, const topic::TopicHierarchy& h) {
    World w = build_world(s, h);
    for (uint64_t i = 0; i < s.steps; ++i) w.step(h);
    return w;
}

}  // namespace smanet::sim
