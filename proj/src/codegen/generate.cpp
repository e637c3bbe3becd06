#include "smanet/codegen/generate.hpp"

#include <fstream>
#include <map>
#include <utility>

#include "smanet/error.hpp"

namespace fs = std::filesystem;

namespace smanet::codegen {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string xml_unescape(const std::string& s) {
    std::string out;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out += s[i++];
            continue;
        }
        auto take = [&](std::string_view ent, char c) {
            if (s.compare(i, ent.size(), ent) == 0) {
                out += c;
                i += ent.size();
                return true;
            }
            return false;
        };
        if (take("&amp;", '&') || take("&lt;", '<') || take("&gt;", '>') ||
            take("&quot;", '"'))
            continue;
        out += s[i++];
    }
    return out;
}

std::string rendered(const dsl::TextValue& v,
                     const std::optional<LanguageFile>& lf) {
    if (!v.is_key) return v.raw;
    if (!lf) return "{{" + v.raw + "}}";
    return substitute(v, *lf);
}

void emit_subject(std::string& out, const topic::TopicHierarchy& h,
                  const std::string& code,
                  const std::optional<LanguageFile>& lf, int level) {
    const auto& n = h.node(code);
    out.append(static_cast<size_t>(level) * 2, ' ');
    out += "<subject code=\"" + xml_escape(n.code) + "\" name=\"" +
           xml_escape(rendered(n.name, lf)) + "\" desc=\"" +
           xml_escape(rendered(n.description, lf)) + "\"";
    if (n.children.empty()) {
        out += "/>\n";
        return;
    }
    out += ">\n";
    for (const auto& child : n.children)
        emit_subject(out, h, child, lf, level + 1);
    out.append(static_cast<size_t>(level) * 2, ' ');
    out += "</subject>\n";
}

// Fixed label set with built-in fallbacks; app_name defaults to the model's
// application name rather than a constant.
const std::pair<const char*, const char*> kLabels[] = {
    {"app_name", ""},
    {"publish_action", "Publish"},
    {"subscribe_action", "Subscribe"},
    {"notification_title", "New publication"},
};

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

// --- minimal reader for the subjects schema ---------------------------------

struct XmlCursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t' ||
                text[pos] == '\r'))
            ++pos;
    }
    bool starts_with(std::string_view s) const {
        return text.compare(pos, s.size(), s) == 0;
    }
    void expect(std::string_view s) {
        if (!starts_with(s))
            throw FormatError("subjects xml: expected '" + std::string(s) +
                              "' at offset " + std::to_string(pos));
        pos += s.size();
    }
};

std::string read_attr(XmlCursor& c, std::string_view attr_name) {
    c.skip_ws();
    c.expect(attr_name);
    c.expect("=\"");
    std::string value;
    while (c.pos < c.text.size() && c.text[c.pos] != '"')
        value += c.text[c.pos++];
    c.expect("\"");
    return xml_unescape(value);
}

ParsedSubject read_subject(XmlCursor& c) {
    c.skip_ws();
    c.expect("<subject");
    ParsedSubject s;
    s.code = read_attr(c, "code");
    s.name = read_attr(c, "name");
    s.desc = read_attr(c, "desc");
    c.skip_ws();
    if (c.starts_with("/>")) {
        c.pos += 2;
        return s;
    }
    c.expect(">");
    while (true) {
        c.skip_ws();
        if (c.starts_with("</subject>")) {
            c.pos += 10;
            return s;
        }
        s.sons.push_back(read_subject(c));
    }
}

}  // namespace

std::string emit_subjects_xml(const topic::TopicHierarchy& h,
                              const std::optional<LanguageFile>& lf) {
    std::string out = "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n<subjects>\n";
    for (const auto& root : h.roots()) emit_subject(out, h, root, lf, 1);
    out += "</subjects>\n";
    return out;
}

std::string emit_values(const dsl::SmModel& model, const LanguageFile& lf,
                        std::vector<std::string>& defaulted) {
    std::string out =
        "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n<resources>\n";
    for (const auto& [key, fallback] : kLabels) {
        std::string value;
        auto it = lf.entries.find(key);
        if (it != lf.entries.end()) {
            value = it->second;
        } else {
            value = std::string(key) == "app_name" ? model.app_name : fallback;
            defaulted.push_back(key);
        }
        out += "  <string name=\"" + xml_escape(key) + "\">" +
               xml_escape(value) + "</string>\n";
    }
    out += "</resources>\n";
    return out;
}

std::vector<ParsedSubject> parse_subjects_xml(const std::string& xml) {
    XmlCursor c{xml};
    c.skip_ws();
    if (c.starts_with("<?xml")) {
        auto end = xml.find("?>", c.pos);
        if (end == std::string::npos)
            throw FormatError("subjects xml: unterminated declaration");
        c.pos = end + 2;
    }
    c.skip_ws();
    c.expect("<subjects>");
    std::vector<ParsedSubject> roots;
    while (true) {
        c.skip_ws();
        if (c.starts_with("</subjects>")) break;
        if (c.pos >= xml.size())
            throw FormatError("subjects xml: missing </subjects>");
        roots.push_back(read_subject(c));
    }
    return roots;
}

GenerationManifest generate(const dsl::SmModel& model,
                            const fs::path& resources_dir,
                            const fs::path& out_dir) {
    GenerationManifest manifest;
    manifest.output_root = out_dir;

    // Phase 1: produce every file in memory. Any missing language file or
    // unresolved key throws here, before the output tree is touched.
    std::vector<std::pair<std::string, std::string>> files;  // rel path, bytes

    topic::TopicHierarchy h = topic::TopicHierarchy::build(model);
    files.emplace_back("raw/subjects.xml", emit_subjects_xml(h, std::nullopt));

    std::vector<LanguageFile> langs;
    for (const auto& r : model.resources)
        langs.push_back(load_language_file(resources_dir / r.filename, r.language));

    for (const auto& lf : langs)
        files.emplace_back("raw/subjects_" + lf.language + ".xml",
                           emit_subjects_xml(h, lf));
    for (const auto& lf : langs) {
        std::vector<std::string> defaulted;
        files.emplace_back("values-" + lf.language + "/strings.xml",
                           emit_values(model, lf, defaulted));
        for (const auto& key : defaulted)
            manifest.warnings.push_back("values-" + lf.language +
                                        ": defaulted label '" + key + "'");
    }

    std::string conf = "appName=" + model.app_name + "\nlanguages=";
    for (size_t i = 0; i < model.resources.size(); ++i) {
        if (i) conf += ",";
        conf += model.resources[i].language;
    }
    conf += "\nresourcesFolder=" + model.resources_folder + "\n";
    files.emplace_back("compiler/conf.properties", std::move(conf));

    // Phase 2: stage on disk, then move into place.
    std::error_code ec;
    fs::path stage = out_dir;
    stage += ".staging";
    fs::remove_all(stage, ec);
    try {
        for (const auto& [rel, content] : files) {
            fs::path target = stage / rel;
            fs::create_directories(target.parent_path());
            std::ofstream f(target, std::ios::binary);
            if (!f || !(f << content))
                throw IoError("cannot write " + target.string());
            f.close();
            manifest.files.push_back(
                {rel, content.size(), hex64(fnv1a64(content))});
        }
        fs::create_directories(out_dir);
        for (const auto& [rel, content] : files) {
            fs::path target = out_dir / rel;
            fs::create_directories(target.parent_path());
            fs::rename(stage / rel, target);
        }
        fs::remove_all(stage);
    } catch (...) {
        fs::remove_all(stage, ec);
        throw;
    }
    return manifest;
}

}  // namespace smanet::codegen
