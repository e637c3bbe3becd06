#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "smanet/dsl/ast.hpp"
#include "smanet/dsl/parser.hpp"
#include "smanet/dsl/validate.hpp"
#include "smanet/topic/hierarchy.hpp"

namespace test_support {

inline std::filesystem::path fixture_dir() { return SMANET_FIXTURE_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline smanet::dsl::SmModel load_confinfo() {
    auto r = smanet::dsl::parse(read_file(fixture_dir() / "confinfo.sm"));
    if (!r.ok()) throw std::runtime_error("confinfo fixture does not parse");
    return *r.model;
}

inline smanet::topic::TopicHierarchy confinfo_hierarchy() {
    return smanet::topic::TopicHierarchy::build(load_confinfo());
}

// Random subject forest: up to max_subjects nodes, depth <= 5, codes s0..sN.
inline std::vector<smanet::dsl::SubjectDecl> random_forest(std::mt19937& rng,
                                                           int max_subjects) {
    using smanet::dsl::SubjectDecl;
    int budget = 1 + static_cast<int>(rng() % max_subjects);
    int counter = 0;

    struct Gen {
        std::mt19937& rng;
        int& budget;
        int& counter;
        SubjectDecl subject(int depth) {
            SubjectDecl s;
            s.code = "s" + std::to_string(counter++);
            s.name = {"name of " + s.code, rng() % 2 == 0};
            s.description = {"desc of " + s.code, false};
            --budget;
            if (depth < 5) {
                while (budget > 0 && rng() % 3 == 0)
                    s.sons.push_back(subject(depth + 1));
            }
            return s;
        }
    } gen{rng, budget, counter};

    std::vector<SubjectDecl> forest;
    while (budget > 0) forest.push_back(gen.subject(0));
    return forest;
}

inline smanet::dsl::SmModel random_model(std::mt19937& rng) {
    smanet::dsl::SmModel m;
    m.app_name = "App" + std::to_string(rng() % 1000);
    m.resources_folder = "resources";
    m.resources.push_back({"en", "labels_en.props", {}});
    if (rng() % 2) m.resources.push_back({"fr", "labels_fr.props", {}});
    m.hierarchy = random_forest(rng, 30);
    return m;
}

// Brute-force subtree by an independent walk over SubjectDecls (the oracle
// side of the covers dual route; does not touch TopicHierarchy).
inline bool find_subject(const std::vector<smanet::dsl::SubjectDecl>& forest,
                         const std::string& code,
                         const smanet::dsl::SubjectDecl*& out) {
    for (const auto& s : forest) {
        if (s.code == code) {
            out = &s;
            return true;
        }
        if (find_subject(s.sons, code, out)) return true;
    }
    return false;
}

inline void collect_codes(const smanet::dsl::SubjectDecl& s,
                          std::set<std::string>& out) {
    out.insert(s.code);
    for (const auto& son : s.sons) collect_codes(son, out);
}

inline std::set<std::string> brute_subtree(
    const std::vector<smanet::dsl::SubjectDecl>& forest,
    const std::string& code) {
    const smanet::dsl::SubjectDecl* s = nullptr;
    if (!find_subject(forest, code, s)) return {};
    std::set<std::string> out;
    collect_codes(*s, out);
    return out;
}

}  // namespace test_support
