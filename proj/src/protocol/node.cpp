#include "smanet/protocol/node.hpp"

#include "smanet/error.hpp"

namespace smanet::protocol {

void NodeState::subscribe(const std::string& code,
                          const topic::TopicHierarchy& h) {
    h.node(code);  // throws on unknown code
    subscriptions_.insert(code);
}

Publication NodeState::publish(const std::string& code, std::string payload,
                               uint64_t now, const topic::TopicHierarchy& h) {
    h.node(code);
    Publication p{{id_, next_seq_++}, code, std::move(payload), now};
    store_.emplace(p.id, p);
    return p;
}

Beacon NodeState::make_beacon() const {
    Beacon b;
    b.sender = id_;
    b.subscriptions = subscriptions_;
    b.altruistic = altruistic_;
    for (const auto& [id, pub] : store_) b.holdings.insert(id);
    return b;
}

bool NodeState::interested(const std::string& pub_topic,
                           const topic::TopicHierarchy& h) const {
    if (altruistic_) {
        h.node(pub_topic);
        return true;
    }
    for (const auto& s : subscriptions_)
        if (h.covers(s, pub_topic)) return true;
    return false;
}

size_t NodeState::accept_transfer(const std::vector<Publication>& pubs,
                                  const topic::TopicHierarchy& h,
                                  size_t& dropped) {
    size_t accepted = 0;
    for (const auto& p : pubs) {
        if (!h.contains(p.topic)) {  // hostile input from the wire
            ++dropped;
            continue;
        }
        if (store_.count(p.id)) continue;
        if (!interested(p.topic, h)) {
            ++dropped;
            continue;
        }
        store_.emplace(p.id, p);
        ++accepted;
    }
    return accepted;
}

bool beacon_interested(const Beacon& b, const std::string& pub_topic,
                       const topic::TopicHierarchy& h) {
    if (b.altruistic) {
        h.node(pub_topic);
        return true;
    }
    for (const auto& s : b.subscriptions)
        if (h.covers(s, pub_topic)) return true;
    return false;
}

std::set<PubId> compute_offers(const NodeState& sender, const Beacon& neighbor,
                               const topic::TopicHierarchy& h) {
    std::set<PubId> offers;
    for (const auto& [id, pub] : sender.store()) {
        if (neighbor.holdings.count(id)) continue;
        if (beacon_interested(neighbor, pub.topic, h)) offers.insert(id);
    }
    return offers;
}

std::string store_path(const topic::TopicHierarchy& h, const Publication& p) {
    std::string path;
    for (const auto& code : h.chain_to_root(p.topic)) {
        path += code;
        path += '/';
    }
    path += std::to_string(p.id.publisher) + "_" + std::to_string(p.id.sequence);
    return path;
}

}  // namespace smanet::protocol
