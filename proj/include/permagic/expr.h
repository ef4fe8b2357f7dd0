#ifndef _PERMAGIC_EXPR_H
#define _PERMAGIC_EXPR_H

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permagic/cyclo.h"

namespace permagic {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using SymbolTable = std::map<std::string, Cyclotomic>;

/// Parses an exact cyclotomic expression.
///
/// Accepted forms: integers, + - * / ^ (integer exponents), parentheses, `i`,
/// E(n) (= exp(2 pi i / n), GAP notation), w(n) (alias of E(n)), sqrt(n) for
/// nonnegative integers, cospi(r) and sinpi(r) for rational r, and any name in
/// `symbols`. Whitespace is ignored.
Cyclotomic parse_cyclotomic(std::string_view text, const SymbolTable &symbols = {});

/// Parses "(a, b, c)" or "[a, b, c]" into a list of expressions.
std::vector<Cyclotomic> parse_vector(std::string_view text, const SymbolTable &symbols = {});

}  // namespace permagic

#endif
