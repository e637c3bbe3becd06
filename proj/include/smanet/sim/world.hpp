#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "smanet/protocol/node.hpp"
#include "smanet/topic/hierarchy.hpp"

namespace smanet::sim {

using protocol::NodeId;
using protocol::PubId;
using protocol::Publication;

struct Vec2 {
    double x = 0;
    double y = 0;
};

enum class MobilityModel { Static, RandomWaypoint, Shuttle };

struct MobilitySpec {
    MobilityModel model = MobilityModel::Static;
    // random_waypoint
    double speed_min = 0;
    double speed_max = 0;
    uint64_t pause_steps = 0;
    // shuttle: ping-pong over a fixed waypoint list at constant speed
    std::vector<Vec2> waypoints;
    double speed = 0;
};

struct MobilityState {
    bool has_waypoint = false;
    Vec2 waypoint{};
    double speed = 0;
    uint64_t pause_left = 0;
    size_t shuttle_target = 0;
};

struct SimNode {
    protocol::NodeState state;
    Vec2 pos{};
    MobilitySpec mobility;
    MobilityState ms;
};

struct ScheduledPublication {
    uint64_t step = 0;
    NodeId node = 0;
    std::string topic;
    std::string payload;
};

struct Receipt {
    PubId pub;
    NodeId receiver = 0;
    uint64_t step = 0;
};

struct TransferEvent {
    NodeId sender = 0;
    NodeId receiver = 0;
    PubId pub;
};

// Deterministic discrete-time world. Evolution is a pure function of the
// initial state and the seed: mt19937 is consumed in ascending node-id
// order only, and all node iteration is over ordered maps.
class World {
public:
    World(double width, double height, double radio_range, uint32_t seed)
        : width_(width), height_(height), radio_range_(radio_range),
          rng_(seed) {}

    void add_node(SimNode node);
    void schedule(ScheduledPublication p) { schedule_.push_back(std::move(p)); }

    uint64_t current_step() const { return step_; }
    double width() const { return width_; }
    double height() const { return height_; }
    double radio_range() const { return radio_range_; }
    const std::map<NodeId, SimNode>& nodes() const { return nodes_; }
    SimNode& node(NodeId id);
    const SimNode& node(NodeId id) const;

    // Unit-disk neighborhood, boundary inclusive.
    std::set<NodeId> neighbors(NodeId id) const;

    // Mobility update for one step; positions stay within bounds.
    void move();

    // One synchronous beacon + transfer cycle. Beacons and offers are
    // computed from pre-round state before any transfer is applied, so the
    // result is independent of node iteration order and a publication
    // spreads at most one hop per round.
    void exchange_round(const topic::TopicHierarchy& h);

    // inject scheduled publications -> move -> exchange_round -> step+1.
    void step(const topic::TopicHierarchy& h);

    // Draws a uniform position for any node placed without one; consumed
    // in ascending id order before the first step.
    void place_unpositioned();

    double uniform(double lo, double hi);

    // Stats and trace.
    uint64_t beacon_count() const { return beacons_; }
    uint64_t transfer_count() const { return transfers_total_; }
    uint64_t drop_count() const { return drops_; }
    const std::vector<Receipt>& receipts() const { return receipts_; }
    const std::vector<TransferEvent>& transfer_log() const { return transfer_log_; }
    const std::map<PubId, Publication>& published() const { return published_; }
    const std::map<PubId, uint64_t>& publish_steps() const { return publish_steps_; }
    const std::vector<ScheduledPublication>& scheduled() const { return schedule_; }

private:
    double width_, height_, radio_range_;
    uint64_t step_ = 0;
    std::map<NodeId, SimNode> nodes_;
    std::mt19937 rng_;
    std::vector<ScheduledPublication> schedule_;

    uint64_t beacons_ = 0;
    uint64_t transfers_total_ = 0;
    uint64_t drops_ = 0;
    std::vector<Receipt> receipts_;
    std::vector<TransferEvent> transfer_log_;
    std::map<PubId, Publication> published_;
    std::map<PubId, uint64_t> publish_steps_;
};

}  // namespace smanet::sim
