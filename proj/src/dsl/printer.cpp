#include "smanet/dsl/printer.hpp"

namespace smanet::dsl {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string text_value(const TextValue& v) {
    if (v.is_key) return "{{ " + quote(v.raw) + " }}";
    return quote(v.raw);
}

void indent(std::string& out, int level) {
    out.append(static_cast<size_t>(level) * 4, ' ');
}

void print_subject(std::string& out, const SubjectDecl& s, int level) {
    indent(out, level);
    out += "{\n";
    indent(out, level + 1);
    out += "id : " + s.code + "\n";
    indent(out, level + 1);
    out += "name : " + text_value(s.name) + "\n";
    indent(out, level + 1);
    out += "desc : " + text_value(s.description) + "\n";
    if (!s.sons.empty()) {
        indent(out, level + 1);
        out += "sons :\n";
        for (size_t i = 0; i < s.sons.size(); ++i) {
            print_subject(out, s.sons[i], level + 1);
            if (i + 1 < s.sons.size()) out += ",";
            out += "\n";
        }
    }
    indent(out, level);
    out += "}";
}

}  // namespace

std::string pretty_print(const SmModel& m) {
    std::string out;
    out += "Begin SMANet Application " + m.app_name + "\n";
    out += "Begin Resources\n";
    indent(out, 1);
    out += "resources-folder : " + quote(m.resources_folder) + "\n";
    for (size_t i = 0; i < m.resources.size(); ++i) {
        const auto& r = m.resources[i];
        indent(out, 1);
        out += "{\n";
        indent(out, 2);
        out += "language : " + r.language + "\n";
        indent(out, 2);
        out += "filename : " + quote(r.filename) + "\n";
        indent(out, 1);
        out += "}";
        if (i + 1 < m.resources.size()) out += ",";
        out += "\n";
    }
    out += "End\n";
    out += "Begin Hierarchy\n";
    for (size_t i = 0; i < m.hierarchy.size(); ++i) {
        print_subject(out, m.hierarchy[i], 1);
        if (i + 1 < m.hierarchy.size()) out += ",";
        out += "\n";
    }
    out += "End\n";
    out += "End\n";
    return out;
}

}  // namespace smanet::dsl
