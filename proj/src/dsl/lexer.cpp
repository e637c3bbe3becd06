#include "smanet/dsl/lexer.hpp"

#include <array>
#include <cctype>

namespace smanet::dsl {

namespace {

constexpr std::array kKeywords = {
    "Begin", "End", "SMANet", "Application", "Resources", "Hierarchy",
    "language", "filename", "id", "name", "desc", "sons",
};

bool is_keyword(std::string_view s) {
    for (const char* k : kKeywords)
        if (s == k) return true;
    return false;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_cont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

LexResult tokenize(std::string_view src) {
    LexResult out;
    size_t i = 0;
    int line = 1, col = 1;

    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto push = [&](TokenKind kind, std::string lexeme, Span sp) {
        out.tokens.push_back({kind, std::move(lexeme), sp});
    };

    while (i < src.size()) {
        char c = src[i];
        Span sp{line, col};
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (c == '{' && i + 1 < src.size() && src[i + 1] == '{') {
            advance(2);
            push(TokenKind::Punct, "{{", sp);
            continue;
        }
        if (c == '}' && i + 1 < src.size() && src[i + 1] == '}') {
            advance(2);
            push(TokenKind::Punct, "}}", sp);
            continue;
        }
        if (c == '{' || c == '}' || c == ':' || c == ',') {
            advance(1);
            push(TokenKind::Punct, std::string(1, c), sp);
            continue;
        }
        if (c == '"') {
            advance(1);
            std::string value;
            bool closed = false;
            while (i < src.size()) {
                char d = src[i];
                if (d == '"') {
                    advance(1);
                    closed = true;
                    break;
                }
                if (d == '\n') break;
                if (d == '\\' && i + 1 < src.size() &&
                    (src[i + 1] == '"' || src[i + 1] == '\\')) {
                    value += src[i + 1];
                    advance(2);
                    continue;
                }
                value += d;
                advance(1);
            }
            if (!closed) {
                out.errors.push_back(
                    {Severity::Error, "unterminated string literal", sp});
                continue;
            }
            push(TokenKind::String, std::move(value), sp);
            continue;
        }
        if (ident_start(c)) {
            size_t start = i;
            while (i < src.size() && ident_cont(src[i])) advance(1);
            std::string lexeme(src.substr(start, i - start));
            // 'resources-folder' is the one hyphenated keyword.
            if (lexeme == "resources" && src.substr(i, 7) == "-folder" &&
                (i + 7 >= src.size() || !ident_cont(src[i + 7]))) {
                advance(7);
                lexeme = "resources-folder";
                push(TokenKind::Keyword, std::move(lexeme), sp);
                continue;
            }
            TokenKind kind = is_keyword(lexeme) ? TokenKind::Keyword
                                                : TokenKind::Identifier;
            push(kind, std::move(lexeme), sp);
            continue;
        }
        out.errors.push_back(
            {Severity::Error,
             std::string("illegal character '") + c + "'", sp});
        advance(1);
    }
    out.tokens.push_back({TokenKind::EndOfInput, "", {line, col}});
    return out;
}

std::string detokenize(const std::vector<Token>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (t.kind == TokenKind::EndOfInput) break;
        if (!out.empty()) out += ' ';
        if (t.kind == TokenKind::String) {
            out += '"';
            for (char c : t.lexeme) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            out += '"';
        } else {
            out += t.lexeme;
        }
    }
    return out;
}

}  // namespace smanet::dsl
