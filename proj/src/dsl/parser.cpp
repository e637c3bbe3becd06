#include "smanet/dsl/parser.hpp"

#include "smanet/dsl/lexer.hpp"

namespace smanet::dsl {

namespace {

const char* kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Identifier: return "identifier";
        case TokenKind::String: return "string";
        case TokenKind::Punct: return "punctuation";
        case TokenKind::EndOfInput: return "end of input";
    }
    return "?";
}

std::string describe(const Token& t) {
    if (t.kind == TokenKind::EndOfInput) return "end of input";
    if (t.kind == TokenKind::String) return "string \"" + t.lexeme + "\"";
    return "'" + t.lexeme + "'";
}

// Thrown to unwind to the nearest recovery point.
struct SyntaxError {};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<Diagnostic> diags)
        : tokens_(std::move(tokens)), diags_(std::move(diags)) {}

    ParseResult run() {
        SmModel model;
        bool ok = true;
        try {
            model = parse_model();
        } catch (const SyntaxError&) {
            ok = false;
        }
        ParseResult result;
        result.diagnostics = std::move(diags_);
        if (ok && !has_errors(result.diagnostics))
            result.model = std::move(model);
        return result;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::EndOfInput) ++pos_;
        return t;
    }
    bool at_punct(std::string_view p) const {
        return peek().kind == TokenKind::Punct && peek().lexeme == p;
    }
    bool at_keyword(std::string_view k) const {
        return peek().kind == TokenKind::Keyword && peek().lexeme == k;
    }

    void error_here(const std::string& expected) {
        diags_.push_back({Severity::Error,
                          "expected " + expected + ", found " + describe(peek()),
                          peek().span});
        recover();
        throw SyntaxError{};
    }

    // Skip to the token after the next '}' or to 'End' (not consumed),
    // whichever comes first.
    void recover() {
        while (peek().kind != TokenKind::EndOfInput) {
            if (at_punct("}")) {
                next();
                return;
            }
            if (at_keyword("End")) return;
            next();
        }
    }

    void expect_keyword(std::string_view k) {
        if (!at_keyword(k)) error_here("'" + std::string(k) + "'");
        next();
    }
    void expect_punct(std::string_view p) {
        if (!at_punct(p)) error_here("'" + std::string(p) + "'");
        next();
    }
    Token expect_ident() {
        if (peek().kind != TokenKind::Identifier) error_here("an identifier");
        return next();
    }
    Token expect_string() {
        if (peek().kind != TokenKind::String) error_here("a string literal");
        return next();
    }

    SmModel parse_model() {
        SmModel m;
        m.span = peek().span;
        expect_keyword("Begin");
        expect_keyword("SMANet");
        expect_keyword("Application");
        m.app_name = expect_ident().lexeme;
        expect_keyword("Begin");
        expect_keyword("Resources");
        expect_keyword("resources-folder");
        expect_punct(":");
        m.resources_folder = expect_string().lexeme;
        m.resources.push_back(parse_resource());
        while (at_punct(",")) {
            next();
            m.resources.push_back(parse_resource());
        }
        expect_keyword("End");
        expect_keyword("Begin");
        expect_keyword("Hierarchy");
        m.hierarchy.push_back(parse_subject());
        while (at_punct(",")) {
            next();
            m.hierarchy.push_back(parse_subject());
        }
        expect_keyword("End");
        expect_keyword("End");
        if (peek().kind != TokenKind::EndOfInput)
            error_here("end of input");
        return m;
    }

    ResourceDecl parse_resource() {
        ResourceDecl r;
        r.span = peek().span;
        try {
            expect_punct("{");
            expect_keyword("language");
            expect_punct(":");
            r.language = expect_ident().lexeme;
            expect_keyword("filename");
            expect_punct(":");
            r.filename = expect_string().lexeme;
            expect_punct("}");
        } catch (const SyntaxError&) {
            // recovered past this block; keep whatever parsed
        }
        return r;
    }

    TextValue parse_text_value() {
        TextValue v;
        v.span = peek().span;
        if (at_punct("{{")) {
            next();
            Token key = expect_string();
            expect_punct("}}");
            v.raw = key.lexeme;
            v.is_key = true;
            if (v.raw.empty() || v.raw.find("{{") != std::string::npos ||
                v.raw.find("}}") != std::string::npos) {
                diags_.push_back({Severity::Error,
                                  "invalid language-file key \"" + v.raw + "\"",
                                  key.span});
            }
        } else {
            v.raw = expect_string().lexeme;
        }
        return v;
    }

    SubjectDecl parse_subject() {
        SubjectDecl s;
        s.span = peek().span;
        try {
            expect_punct("{");
            expect_keyword("id");
            expect_punct(":");
            s.code = expect_ident().lexeme;
            expect_keyword("name");
            expect_punct(":");
            s.name = parse_text_value();
            expect_keyword("desc");
            expect_punct(":");
            s.description = parse_text_value();
            if (at_keyword("sons")) {
                next();
                expect_punct(":");
                s.sons.push_back(parse_subject());
                while (at_punct(",")) {
                    next();
                    s.sons.push_back(parse_subject());
                }
            }
            expect_punct("}");
        } catch (const SyntaxError&) {
        }
        return s;
    }

    std::vector<Token> tokens_;
    std::vector<Diagnostic> diags_;
    size_t pos_ = 0;
};

}  // namespace

ParseResult parse(std::string_view source) {
    LexResult lexed = tokenize(source);
    if (!lexed.errors.empty()) {
        ParseResult r;
        r.diagnostics = std::move(lexed.errors);
        return r;
    }
    return Parser(std::move(lexed.tokens), {}).run();
}

bool same_subject(const SubjectDecl& a, const SubjectDecl& b) {
    if (a.code != b.code || !a.name.same_value(b.name) ||
        !a.description.same_value(b.description) || a.sons.size() != b.sons.size())
        return false;
    for (size_t i = 0; i < a.sons.size(); ++i)
        if (!same_subject(a.sons[i], b.sons[i])) return false;
    return true;
}

bool same_model(const SmModel& a, const SmModel& b) {
    if (a.app_name != b.app_name || a.resources_folder != b.resources_folder ||
        a.resources.size() != b.resources.size() ||
        a.hierarchy.size() != b.hierarchy.size())
        return false;
    for (size_t i = 0; i < a.resources.size(); ++i)
        if (a.resources[i].language != b.resources[i].language ||
            a.resources[i].filename != b.resources[i].filename)
            return false;
    for (size_t i = 0; i < a.hierarchy.size(); ++i)
        if (!same_subject(a.hierarchy[i], b.hierarchy[i])) return false;
    return true;
}

}  // namespace smanet::dsl
