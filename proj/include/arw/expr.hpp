#pragma once

#include <string>
#include <string_view>

#include "arw/coalgebra.hpp"
#include "arw/symfunc.hpp"

namespace arw {

/// Parses calculator syntax like "3/2*p[2,1] + s[3] - h[1,1]" or "1 - 2*e[2]".
/// Bases may be mixed inside one expression; the result is returned in the
/// power basis. Throws ParseError with a byte position on bad input.
SymFunc parse_symfunc(std::string_view text, int cap = -1);

/// Canonical rendering in the element's own basis: terms in canonical
/// partition order, unit coefficients omitted, constant terms printed bare.
std::string format_symfunc(const SymFunc& f);

/// "c * s[mu] (x) s[nu]" terms joined with " + ".
std::string format_tensor(const Tensor2& t);

}  // namespace arw
