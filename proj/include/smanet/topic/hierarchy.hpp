#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smanet/dsl/ast.hpp"

namespace smanet::topic {

struct TopicNode {
    std::string code;
    dsl::TextValue name;
    dsl::TextValue description;
    std::optional<std::string> parent;
    std::vector<std::string> children;  // declaration order
    int depth = 0;                      // roots at 0
};

// Immutable after construction; safe to share across threads.
class TopicHierarchy {
public:
    // model must have passed validation; duplicate codes are re-checked
    // and throw LookupError naming the offending code.
    static TopicHierarchy build(const dsl::SmModel& model);

    const std::vector<std::string>& roots() const { return roots_; }
    const std::map<std::string, TopicNode>& index() const { return index_; }
    size_t size() const { return index_.size(); }
    bool contains(const std::string& code) const { return index_.count(code) > 0; }

    // Throws LookupError on unknown code.
    const TopicNode& node(const std::string& code) const;

    // code plus all transitive descendants.
    std::set<std::string> subtree(const std::string& code) const;

    // Root-to-code chain of codes, inclusive.
    std::vector<std::string> chain_to_root(const std::string& code) const;

    // True iff one code is an ancestor-or-self of the other, i.e. both lie
    // on a single root-to-leaf chain. A subscription to a topic reaches its
    // whole subtree, and a publication on a topic reaches subscribers of
    // its descendants, so the relation runs both ways along the chain.
    bool covers(const std::string& subscription_code,
                const std::string& publication_code) const;

    // Downward closure of covers over subs: every code p with
    // covers(s, p) for some s in subs.
    std::set<std::string> effective_subscriptions(
        const std::set<std::string>& subs) const;

    // All codes in a stable, deterministic order (declaration order).
    const std::vector<std::string>& codes_in_order() const { return order_; }

private:
    std::vector<std::string> roots_;
    std::vector<std::string> order_;
    std::map<std::string, TopicNode> index_;
};

}  // namespace smanet::topic
