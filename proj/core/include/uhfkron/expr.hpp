#pragma once

#include <string>
#include <string_view>

#include "uhfkron/element.hpp"

namespace uhfkron {

/// Parses the element expression language:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [scalar '*'] chain ('*' chain)*
///   chain  := atom ('(x)' atom)*
///   atom   := 'E[' nat '](' nat ',' nat ')' | '(' expr ')'
///   scalar := real | '(' real ',' real ')'
///
/// '(x)' is the tensor product and '*' between chains the algebra product.
/// Whitespace is ignored. Throws ParseError (with line and column) on bad syntax,
/// Error(validation) on out-of-range indices and Error(signature_mismatch) when
/// terms disagree on their signature.
AlgebraElement parse_element(std::string_view text);

/// Prints x in the same language; parse_element(format_element(x)) == x.
/// Terms appear in lexicographic index order; the zero element is printed as
/// 0 times the first unit so that its signature survives.
std::string format_element(const AlgebraElement& x);

}  // namespace uhfkron
