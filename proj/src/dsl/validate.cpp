#include "smanet/dsl/validate.hpp"

#include <cctype>
#include <map>
#include <string>

namespace smanet::dsl {

namespace {

bool lowercase_two_letter(const std::string& code) {
    return code.size() == 2 &&
           std::islower(static_cast<unsigned char>(code[0])) &&
           std::islower(static_cast<unsigned char>(code[1]));
}

std::string span_str(Span s) {
    return std::to_string(s.line) + ":" + std::to_string(s.column);
}

void walk(const SubjectDecl& s, std::map<std::string, Span>& seen,
          std::vector<Diagnostic>& diags) {
    auto [it, inserted] = seen.emplace(s.code, s.span);
    if (!inserted) {
        diags.push_back({Severity::Error,
                         "duplicate subject code '" + s.code +
                             "' (first declared at " + span_str(it->second) + ")",
                         s.span});
    }
    if (!s.description.is_key && s.description.raw.empty()) {
        diags.push_back({Severity::Warning,
                         "subject '" + s.code + "' has an empty description",
                         s.description.span});
    }
    for (const auto& son : s.sons) walk(son, seen, diags);
}

}  // namespace

std::vector<Diagnostic> validate(const SmModel& model, ValidationMode mode) {
    std::vector<Diagnostic> diags;

    std::map<std::string, Span> languages;
    for (const auto& r : model.resources) {
        auto [it, inserted] = languages.emplace(r.language, r.span);
        if (!inserted) {
            diags.push_back({Severity::Error,
                             "duplicate language '" + r.language +
                                 "' (first declared at " + span_str(it->second) +
                                 ")",
                             r.span});
        }
        if (!lowercase_two_letter(r.language)) {
            diags.push_back({Severity::Error,
                             "language '" + r.language +
                                 "' is not a lowercase two-letter code",
                             r.span});
        } else if (mode == ValidationMode::Strict && r.language != "en" &&
                   r.language != "fr") {
            diags.push_back({Severity::Error,
                             "language '" + r.language + "' not in grammar",
                             r.span});
        }
    }

    std::map<std::string, Span> codes;
    for (const auto& s : model.hierarchy) walk(s, codes, diags);
    return diags;
}

}  // namespace smanet::dsl
