#pragma once

#include <vector>

#include "smanet/dsl/ast.hpp"

namespace smanet::dsl {

// strict: language codes limited to the grammar's ('en' | 'fr').
// permissive: any lowercase two-letter code.
enum class ValidationMode { Strict, Permissive };

// Semantic checks the grammar cannot express: global subject-code
// uniqueness, resource language uniqueness, language-code set membership.
// Warnings: empty literal description strings.
std::vector<Diagnostic> validate(const SmModel& model, ValidationMode mode);

}  // namespace smanet::dsl
