#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "smanet/dsl/ast.hpp"

namespace smanet::codegen {

// A `key=value` translation file; `#` lines and blank lines are ignored.
struct LanguageFile {
    std::string language;
    std::map<std::string, std::string> entries;
};

// Throws IoError on a missing/unreadable file, FormatError (with line
// number) on duplicate keys, keys with whitespace, or lines without '='.
LanguageFile load_language_file(const std::filesystem::path& path,
                                const std::string& language);

// Parses from memory; used by load_language_file and tests.
LanguageFile parse_language_file(const std::string& content,
                                 const std::string& language);

// Key lookup for keyed values, identity for literals. Throws
// MissingKeyError naming the key and language when unresolved.
std::string substitute(const dsl::TextValue& text, const LanguageFile& lf);

}  // namespace smanet::codegen
