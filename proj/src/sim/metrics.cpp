#include "smanet/sim/metrics.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace smanet::sim {

MetricsReport compute_metrics(const World& w, const topic::TopicHierarchy& h) {
    MetricsReport r;
    r.steps = w.current_step();
    r.total_beacons = w.beacon_count();
    r.total_transfers = w.transfer_count();
    r.drops = w.drop_count();

    std::map<PubId, std::vector<const Receipt*>> by_pub;
    for (const auto& rc : w.receipts()) by_pub[rc.pub].push_back(&rc);

    double ratio_sum = 0;
    auto count_subscribers = [&](NodeId publisher, const std::string& topic) {
        size_t count = 0;
        for (const auto& [nid, n] : w.nodes()) {
            if (nid == publisher) continue;
            for (const auto& s : n.state.subscriptions())
                if (h.covers(s, topic)) {
                    ++count;
                    break;
                }
        }
        return count;
    };
    auto finish = [&](PublicationMetrics pm) {
        pm.delivery_ratio =
            pm.subscriber_count == 0
                ? 1.0
                : static_cast<double>(pm.reached) / pm.subscriber_count;
        ratio_sum += pm.delivery_ratio;
        r.publications.push_back(std::move(pm));
    };

    for (const auto& [pid, pub] : w.published()) {
        PublicationMetrics pm;
        pm.id = pid;
        pm.topic = pub.topic;
        pm.publish_step = w.publish_steps().at(pid);
        pm.subscriber_count = count_subscribers(pid.publisher, pub.topic);
        auto it = by_pub.find(pid);
        if (it != by_pub.end()) {
            pm.reached = it->second.size();
            for (const Receipt* rc : it->second)
                pm.latencies.push_back(rc->step - pm.publish_step);
        }
        finish(std::move(pm));
    }

    // Publications scheduled past the executed horizon were never injected;
    // report them with the sequence number they would have drawn.
    std::map<NodeId, uint64_t> next_seq;
    std::vector<const ScheduledPublication*> by_time;
    for (const auto& sp : w.scheduled()) by_time.push_back(&sp);
    std::stable_sort(by_time.begin(), by_time.end(),
                     [](const auto* a, const auto* b) { return a->step < b->step; });
    for (const ScheduledPublication* sp : by_time) {
        uint64_t seq = next_seq[sp->node]++;
        if (sp->step < w.current_step()) continue;  // injected, counted above
        PublicationMetrics pm;
        pm.id = {sp->node, seq};
        pm.topic = sp->topic;
        pm.publish_step = sp->step;
        pm.subscriber_count = count_subscribers(sp->node, sp->topic);
        finish(std::move(pm));
    }
    r.mean_delivery_ratio =
        r.publications.empty() ? 1.0 : ratio_sum / r.publications.size();
    return r;
}

std::string metrics_to_json(const MetricsReport& r) {
    nlohmann::ordered_json j;
    j["steps"] = r.steps;
    j["publications"] = nlohmann::ordered_json::array();
    for (const auto& pm : r.publications) {
        nlohmann::ordered_json p;
        p["publisher"] = pm.id.publisher;
        p["sequence"] = pm.id.sequence;
        p["topic"] = pm.topic;
        p["publish_step"] = pm.publish_step;
        p["subscriber_count"] = pm.subscriber_count;
        p["reached"] = pm.reached;
        p["delivery_ratio"] = pm.delivery_ratio;
        p["latencies"] = pm.latencies;
        j["publications"].push_back(std::move(p));
    }
    j["global"] = {{"total_beacons", r.total_beacons},
                   {"total_transfers", r.total_transfers},
                   {"drops", r.drops},
                   {"mean_delivery_ratio", r.mean_delivery_ratio}};
    return j.dump(2) + "\n";
}

std::string metrics_to_csv(const MetricsReport& r) {
    std::string out =
        "publisher,sequence,topic,publish_step,subscriber_count,reached,"
        "delivery_ratio\n";
    for (const auto& pm : r.publications) {
        out += std::to_string(pm.id.publisher) + "," +
               std::to_string(pm.id.sequence) + "," + pm.topic + "," +
               std::to_string(pm.publish_step) + "," +
               std::to_string(pm.subscriber_count) + "," +
               std::to_string(pm.reached) + "," +
               std::to_string(pm.delivery_ratio) + "\n";
    }
    return out;
}

}  // namespace smanet::sim
