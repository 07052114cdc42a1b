#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wzt/tree_diagram.hpp"

namespace wzt {

/// Parses a diagram literal "{ TREE ; MIDDLE ; TREE }". The tree grammar is
/// "L" / "(T,T)" with the two-leaf shorthand Λ accepted; the middle uses the
/// instance grammar ("b2: s1", "[2,1]", "1", "z^2: (1,0)"). When `sys` is
/// null the instance is inferred from the middle's shape.
TreeDiagram parse_diagram(std::string_view text, const CloningSystem* sys = nullptr);

/// Evaluates an expression over diagram literals with `*` (product), `^-1`
/// (inverse) and an optional top-level `<=>` comparison. Returns either the
/// resulting diagram's text or the comparison verdict. Parse errors throw
/// std::invalid_argument with the offending position.
std::string eval_expression(std::string_view text, const CloningSystem* sys = nullptr);

}  // namespace wzt
