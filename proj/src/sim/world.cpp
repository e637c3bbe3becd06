#include "smanet/sim/world.hpp"

#include <cmath>

#include "smanet/error.hpp"

namespace smanet::sim {

namespace {

double dist(Vec2 a, Vec2 b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Advance from pos toward target by at most speed; returns true on arrival.
bool advance(Vec2& pos, Vec2 target, double speed) {
    double d = dist(pos, target);
    if (d <= speed) {
        pos = target;
        return true;
    }
    pos.x += (target.x - pos.x) / d * speed;
    pos.y += (target.y - pos.y) / d * speed;
    return false;
}

}  // namespace

void World::add_node(SimNode node) {
    NodeId id = node.state.id();
    if (!nodes_.emplace(id, std::move(node)).second)
        throw LookupError("duplicate node id " + std::to_string(id));
}

SimNode& World::node(NodeId id) {
    auto it = nodes_.find(id);
    if (it == nodes_.end())
        throw LookupError("unknown node id " + std::to_string(id));
    return it->second;
}

const SimNode& World::node(NodeId id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end())
        throw LookupError("unknown node id " + std::to_string(id));
    return it->second;
}

double World::uniform(double lo, double hi) {
    // Scale raw mt19937 output instead of std::uniform_real_distribution,
    // whose results differ across standard libraries.
    double u = rng_() * (1.0 / 4294967296.0);
    return lo + (hi - lo) * u;
}

void World::place_unpositioned() {
    for (auto& [id, n] : nodes_) {
        if (std::isnan(n.pos.x)) {
            n.pos.x = uniform(0, width_);
            n.pos.y = uniform(0, height_);
        }
    }
}

std::set<NodeId> World::neighbors(NodeId id) const {
    const SimNode& me = node(id);
    std::set<NodeId> out;
    for (const auto& [other_id, other] : nodes_) {
        if (other_id == id) continue;
        if (dist(me.pos, other.pos) <= radio_range_) out.insert(other_id);
    }
    return out;
}

void World::move() {
    for (auto& [id, n] : nodes_) {
        switch (n.mobility.model) {
            case MobilityModel::Static:
                break;
            case MobilityModel::Shuttle: {
                if (n.mobility.waypoints.empty()) break;
                Vec2 target = n.mobility.waypoints[n.ms.shuttle_target];
                if (advance(n.pos, target, n.mobility.speed))
                    n.ms.shuttle_target =
                        (n.ms.shuttle_target + 1) % n.mobility.waypoints.size();
                break;
            }
            case MobilityModel::RandomWaypoint: {
                if (n.ms.pause_left > 0) {
                    --n.ms.pause_left;
                    break;
                }
                if (!n.ms.has_waypoint) {
                    n.ms.waypoint = {uniform(0, width_), uniform(0, height_)};
                    n.ms.speed =
                        uniform(n.mobility.speed_min, n.mobility.speed_max);
                    n.ms.has_waypoint = true;
                }
                if (advance(n.pos, n.ms.waypoint, n.ms.speed)) {
                    n.ms.has_waypoint = false;
                    n.ms.pause_left = n.mobility.pause_steps;
                }
                break;
            }
        }
    }
}

void World::exchange_round(const topic::TopicHierarchy& h) {
    std::map<NodeId, protocol::Beacon> beacons;
    for (const auto& [id, n] : nodes_) beacons.emplace(id, n.state.make_beacon());
    beacons_ += nodes_.size();

    // Detection of requirements: all offers are decided against pre-round
    // beacons before any transfer lands.
    struct Delivery {
        NodeId sender;
        Publication pub;
    };
    std::map<NodeId, std::vector<Delivery>> inbound;
    for (const auto& [sender_id, sender] : nodes_) {
        for (NodeId receiver_id : neighbors(sender_id)) {
            auto offers =
                compute_offers(sender.state, beacons.at(receiver_id), h);
            transfers_total_ += offers.size();
            for (const PubId& pid : offers) {
                inbound[receiver_id].push_back(
                    {sender_id, sender.state.store().at(pid)});
                transfer_log_.push_back({sender_id, receiver_id, pid});
            }
        }
    }

    // Transfer of publications.
    uint64_t receipt_step = step_ + 1;
    for (auto& [receiver_id, deliveries] : inbound) {
        SimNode& receiver = nodes_.at(receiver_id);
        for (const auto& d : deliveries) {
            size_t dropped = 0;
            size_t accepted =
                receiver.state.accept_transfer({d.pub}, h, dropped);
            drops_ += dropped;
            if (accepted == 0) continue;
            bool subscriber = false;
            for (const auto& s : receiver.state.subscriptions())
                if (h.covers(s, d.pub.topic)) {
                    subscriber = true;
                    break;
                }
            if (subscriber && receiver_id != d.pub.id.publisher)
                receipts_.push_back({d.pub.id, receiver_id, receipt_step});
        }
    }
}

void World::step(const topic::TopicHierarchy& h) {
    for (const auto& sp : schedule_) {
        if (sp.step != step_) continue;
        SimNode& n = node(sp.node);
        Publication p = n.state.publish(sp.topic, sp.payload, step_, h);
        published_.emplace(p.id, p);
        publish_steps_.emplace(p.id, step_);
    }
    move();
    exchange_round(h);
    ++step_;
}

}  // namespace smanet::sim
