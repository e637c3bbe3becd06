#pragma once

#include <string>
#include <vector>

namespace smanet::dsl {

struct Span {
    int line = 0;  // 1-based
    int column = 0;  // 1-based

    bool operator==(const Span&) const = default;
};

// A string that is either literal text or a key into a language file.
// Keys come from `{{ "key" }}` source syntax, braces stripped.
struct TextValue {
    std::string raw;
    bool is_key = false;
    Span span;

    bool same_value(const TextValue& o) const {
        return raw == o.raw && is_key == o.is_key;
    }
};

struct ResourceDecl {
    std::string language;  // two-letter code, e.g. "en"
    std::string filename;  // relative to the resources folder
    Span span;
};

struct SubjectDecl {
    std::string code;
    TextValue name;
    TextValue description;
    std::vector<SubjectDecl> sons;
    Span span;
};

struct SmModel {
    std::string app_name;
    std::string resources_folder;
    std::vector<ResourceDecl> resources;   // length >= 1 when parsed
    std::vector<SubjectDecl> hierarchy;    // length >= 1 when parsed
    Span span;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string message;
    Span span;
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::Error) return true;
    return false;
}

// Structural equality ignoring spans, used by round-trip checks.
bool same_model(const SmModel& a, const SmModel& b);
bool same_subject(const SubjectDecl& a, const SubjectDecl& b);

}  // namespace smanet::dsl
