#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "smanet/dsl/ast.hpp"

namespace smanet::dsl {

struct ParseResult {
    std::optional<SmModel> model;  // present iff diagnostics carry no errors
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return model.has_value(); }
};

// Recursive-descent parse of a `.sm` source. On a syntax error the parser
// reports a diagnostic naming the expected and found tokens, then skips to
// the next '}' or 'End' and keeps going, so one pass surfaces several errors.
ParseResult parse(std::string_view source);

}  // namespace smanet::dsl
