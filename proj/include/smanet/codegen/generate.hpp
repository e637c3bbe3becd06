#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "smanet/codegen/language_file.hpp"
#include "smanet/dsl/ast.hpp"
#include "smanet/topic/hierarchy.hpp"

namespace smanet::codegen {

struct ManifestEntry {
    std::string relative_path;
    uint64_t byte_length = 0;
    std::string content_hash;  // FNV-1a 64, hex
};

struct GenerationManifest {
    std::filesystem::path output_root;
    std::vector<ManifestEntry> files;
    std::vector<std::string> warnings;  // e.g. defaulted label keys
};

// Nested <subject code/name/desc> elements under one <subjects> root.
// Without a language file, keyed values are emitted as {{key}}; with one,
// they are substituted. Attribute values are XML-escaped.
std::string emit_subjects_xml(const topic::TopicHierarchy& h,
                              const std::optional<LanguageFile>& lf);

// Flat <resources><string name="...">...</string></resources> document with
// the fixed label set; missing keys fall back to built-in defaults and are
// reported in `defaulted`.
std::string emit_values(const dsl::SmModel& model, const LanguageFile& lf,
                        std::vector<std::string>& defaulted);

// Reads back an emit_subjects_xml document (codes, nesting, sibling order).
// Only the restricted schema above is understood. Throws FormatError.
struct ParsedSubject {
    std::string code;
    std::string name;
    std::string desc;
    std::vector<ParsedSubject> sons;
};
std::vector<ParsedSubject> parse_subjects_xml(const std::string& xml);

// Writes raw/subjects.xml, raw/subjects_<xx>.xml, values-<xx>/strings.xml
// and compiler/conf.properties under out_dir. All-or-nothing: files are
// staged in a temporary directory and moved only after every file emitted.
GenerationManifest generate(const dsl::SmModel& model,
                            const std::filesystem::path& resources_dir,
                            const std::filesystem::path& out_dir);

}  // namespace smanet::codegen
