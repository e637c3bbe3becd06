#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "smanet/sim/world.hpp"

namespace smanet::sim {

struct ScenarioNode {
    NodeId id = 0;
    bool altruistic = false;
    std::vector<std::string> subscriptions;
    std::optional<Vec2> position;
    MobilitySpec mobility;
};

struct ScenarioConfig {
    uint32_t seed = 0;
    uint64_t steps = 0;
    double width = 0;
    double height = 0;
    double radio_range = 0;
    std::string hierarchy_path;  // `.sm` file, relative to the scenario file
    std::vector<ScenarioNode> nodes;
    std::vector<ScheduledPublication> publications;
};

// Reads the JSON document; throws IoError / ConfigError.
ScenarioConfig load_scenario(const std::filesystem::path& path);

// Parses, validates and builds the hierarchy the scenario points at.
// base_dir resolves a relative hierarchy_path.
topic::TopicHierarchy load_scenario_hierarchy(
    const ScenarioConfig& scenario, const std::filesystem::path& base_dir);

// Checks every code, id and parameter; throws ConfigError listing all
// violations, so a bad scenario never starts running.
void validate_scenario(const ScenarioConfig& scenario,
                       const topic::TopicHierarchy& h);

// Validated scenario -> initial world (unpositioned nodes placed uniformly).
World build_world(const ScenarioConfig& scenario,
                  const topic::TopicHierarchy& h);

// Executes all steps from the initial world.
World run_world(const ScenarioConfig& scenario, const topic::TopicHierarchy& h);

}  // namespace smanet::sim
