#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "smanet/topic/hierarchy.hpp"

namespace smanet::protocol {

using NodeId = uint32_t;

// Network-wide unique publication identity: publisher id + its own
// strictly increasing sequence counter.
struct PubId {
    NodeId publisher = 0;
    uint64_t sequence = 0;

    auto operator<=>(const PubId&) const = default;
};

struct Publication {
    PubId id;
    std::string topic;
    std::string payload;
    uint64_t created_at = 0;  // simulation step
};

// One periodic self-announcement: everything a neighbor needs to compute
// which publications this station lacks and would accept.
struct Beacon {
    NodeId sender = 0;
    std::set<std::string> subscriptions;
    bool altruistic = false;
    std::set<PubId> holdings;
};

class NodeState {
public:
    NodeState() = default;
    NodeState(NodeId id, bool altruistic) : id_(id), altruistic_(altruistic) {}

    NodeId id() const { return id_; }
    bool altruistic() const { return altruistic_; }
    const std::set<std::string>& subscriptions() const { return subscriptions_; }
    const std::map<PubId, Publication>& store() const { return store_; }

    // Idempotent. Throws LookupError on a code missing from h.
    void subscribe(const std::string& code, const topic::TopicHierarchy& h);

    // The publisher always keeps its own publication, subscribed or not.
    Publication publish(const std::string& code, std::string payload,
                        uint64_t now, const topic::TopicHierarchy& h);

    Beacon make_beacon() const;

    // Altruists take everything; otherwise some subscription must cover
    // the topic.
    bool interested(const std::string& pub_topic,
                    const topic::TopicHierarchy& h) const;

    // Stores each publication iff interesting and new. Unknown-topic
    // publications are dropped, counted in `dropped`. Returns the number
    // newly stored.
    size_t accept_transfer(const std::vector<Publication>& pubs,
                           const topic::TopicHierarchy& h, size_t& dropped);

private:
    NodeId id_ = 0;
    bool altruistic_ = false;
    std::set<std::string> subscriptions_;
    std::map<PubId, Publication> store_;
    uint64_t next_seq_ = 0;
};

bool beacon_interested(const Beacon& b, const std::string& pub_topic,
                       const topic::TopicHierarchy& h);

// Publications the sender holds that the beacon's owner wants and lacks.
std::set<PubId> compute_offers(const NodeState& sender, const Beacon& neighbor,
                               const topic::TopicHierarchy& h);

// Storage layout mirroring the hierarchy: root-to-topic codes joined by
// '/', then "<publisher>_<seq>".
std::string store_path(const topic::TopicHierarchy& h, const Publication& p);

}  // namespace smanet::protocol
