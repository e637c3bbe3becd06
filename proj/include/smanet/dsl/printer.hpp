#pragma once

#include <string>

#include "smanet/dsl/ast.hpp"

namespace smanet::dsl {

// Canonical formatter: 4-space indent per nesting level, one field per
// line, keys re-framed as `{{ "key" }}`. parse(pretty_print(m)) == m.
std::string pretty_print(const SmModel& model);

}  // namespace smanet::dsl
