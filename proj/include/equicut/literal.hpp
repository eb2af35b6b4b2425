#pragma once

#include <string>
#include <string_view>

#include "equicut/tower.hpp"

namespace equicut {

// Exact number literals:
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | 'sqrt' '(' expr ')' | '(' expr ')'
//   rational := ['-'] digits ['/' digits]
//
// Whitespace between tokens is ignored. Parse errors carry the offending
// character offset; a negative sqrt argument raises NegativeRadicand.
TowerReal parse_number(std::string_view text);

// Canonical text form: rational part first, then radical terms ordered by
// their nested radicands and squarefree kernel. Rational-radicand levels are
// folded into a single sqrt(kernel), so the output does not depend on the
// order in which levels were adjoined. parse_number(format_number(x)) == x.
std::string format_number(const TowerReal& x);

// Decimal rendering at `digits` significant digits, for display only.
std::string format_decimal(const TowerReal& x, int digits = 12);

}  // namespace equicut
