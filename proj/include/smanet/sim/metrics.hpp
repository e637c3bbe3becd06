#pragma once

#include <string>
#include <vector>

#include "smanet/sim/world.hpp"

namespace smanet::sim {

struct PublicationMetrics {
    PubId id;
    std::string topic;
    uint64_t publish_step = 0;
    // Subscribers are nodes (other than the publisher) whose subscriptions
    // cover the topic; altruism alone does not make a node a target.
    size_t subscriber_count = 0;
    size_t reached = 0;
    double delivery_ratio = 0;  // 1.0 when the subscriber set is empty
    std::vector<uint64_t> latencies;  // receipt step - publish step
};

struct MetricsReport {
    uint64_t steps = 0;
    std::vector<PublicationMetrics> publications;
    uint64_t total_beacons = 0;
    uint64_t total_transfers = 0;
    uint64_t drops = 0;
    double mean_delivery_ratio = 0;
};

MetricsReport compute_metrics(const World& w, const topic::TopicHierarchy& h);

// Deterministic serializations: same world, same bytes.
std::string metrics_to_json(const MetricsReport& r);
std::string metrics_to_csv(const MetricsReport& r);  // one row per publication

}  // namespace smanet::sim
