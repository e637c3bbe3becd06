#include "smanet/topic/hierarchy.hpp"

#include <algorithm>

#include "smanet/error.hpp"

namespace smanet::topic {

namespace {

void insert_subject(TopicHierarchy& h, std::map<std::string, TopicNode>& index,
                    std::vector<std::string>& order, const dsl::SubjectDecl& s,
                    const std::optional<std::string>& parent, int depth) {
    if (index.count(s.code))
        throw LookupError("duplicate subject code '" + s.code + "'");
    TopicNode node;
    node.code = s.code;
    node.name = s.name;
    node.description = s.description;
    node.parent = parent;
    node.depth = depth;
    for (const auto& son : s.sons) node.children.push_back(son.code);
    index.emplace(s.code, std::move(node));
    order.push_back(s.code);
    for (const auto& son : s.sons)
        insert_subject(h, index, order, son, s.code, depth + 1);
}

}  // namespace

TopicHierarchy TopicHierarchy::build(const dsl::SmModel& model) {
    TopicHierarchy h;
    for (const auto& s : model.hierarchy) {
        h.roots_.push_back(s.code);
        insert_subject(h, h.index_, h.order_, s, std::nullopt, 0);
    }
    return h;
}

const TopicNode& TopicHierarchy::node(const std::string& code) const {
    auto it = index_.find(code);
    if (it == index_.end())
        throw LookupError("unknown subject code '" + code + "'");
    return it->second;
}

std::set<std::string> TopicHierarchy::subtree(const std::string& code) const {
    std::set<std::string> out;
    std::vector<const TopicNode*> stack{&node(code)};
    while (!stack.empty()) {
        const TopicNode* n = stack.back();
        stack.pop_back();
        out.insert(n->code);
        for (const auto& c : n->children) stack.push_back(&node(c));
    }
    return out;
}

std::vector<std::string> TopicHierarchy::chain_to_root(
    const std::string& code) const {
    std::vector<std::string> chain;
    const TopicNode* n = &node(code);
    while (true) {
        chain.push_back(n->code);
        if (!n->parent) break;
        n = &node(*n->parent);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

bool TopicHierarchy::covers(const std::string& subscription_code,
                            const std::string& publication_code) const {
    const TopicNode* a = &node(subscription_code);
    const TopicNode* b = &node(publication_code);
    // Walk the deeper node up to the shallower one's depth; on one chain
    // they must then coincide.
    while (a->depth > b->depth) a = &node(*a->parent);
    while (b->depth > a->depth) b = &node(*b->parent);
    return a->code == b->code;
}

std::set<std::string> TopicHierarchy::effective_subscriptions(
    const std::set<std::string>& subs) const {
    std::set<std::string> out;
    for (const auto& s : subs) {
        auto below = subtree(s);
        out.insert(below.begin(), below.end());
        auto chain = chain_to_root(s);
        out.insert(chain.begin(), chain.end());
    }
    return out;
}

}  // namespace smanet::topic
