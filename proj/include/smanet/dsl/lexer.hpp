#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smanet/dsl/ast.hpp"

namespace smanet::dsl {

enum class TokenKind {
    Keyword,      // Begin, End, SMANet, Application, Resources, Hierarchy,
                  // resources-folder, language, filename, id, name, desc, sons
    Identifier,   // letter (letter | digit | '_')*
    String,       // double-quoted, \" and \\ escapes, no newlines
    Punct,        // { } : , {{ }}
    EndOfInput,
};

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string lexeme;  // string tokens hold the unescaped value
    Span span;
};

struct LexResult {
    std::vector<Token> tokens;  // always terminated by EndOfInput
    std::vector<Diagnostic> errors;
};

// Comments start with `//` and run to end of line; they are discarded.
LexResult tokenize(std::string_view source);

// Lexeme-level inverse of tokenize: joins lexemes with single spaces,
// re-quoting strings and re-framing nothing (keys are a parser concern).
std::string detokenize(const std::vector<Token>& tokens);

}  // namespace smanet::dsl
