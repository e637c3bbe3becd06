#include "smanet/codegen/language_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "smanet/error.hpp"

namespace smanet::codegen {

namespace {

bool has_whitespace(const std::string& s) {
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c))) return true;
    return false;
}

}  // namespace

LanguageFile parse_language_file(const std::string& content,
                                 const std::string& language) {
    LanguageFile lf;
    lf.language = language;
    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw FormatError("line " + std::to_string(lineno) +
                              ": missing '=' in language file");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key.empty() || has_whitespace(key))
            throw FormatError("line " + std::to_string(lineno) +
                              ": invalid key '" + key + "'");
        if (!lf.entries.emplace(key, value).second)
            throw FormatError("line " + std::to_string(lineno) +
                              ": duplicate key '" + key + "'");
    }
    return lf;
}

LanguageFile load_language_file(const std::filesystem::path& path,
                                const std::string& language) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read language file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_language_file(buf.str(), language);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string substitute(const dsl::TextValue& text, const LanguageFile& lf) {
    if (!text.is_key) return text.raw;
    auto it = lf.entries.find(text.raw);
    if (it == lf.entries.end())
        throw MissingKeyError("key '" + text.raw + "' not found in language '" +
                              lf.language + "'");
    return it->second;
}

}  // namespace smanet::codegen
