#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blowup/polynomial.hpp"

namespace blowup {

/// Parses a polynomial expression over `field` in the named variables.
///
/// Grammar (whitespace ignored):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' unary) | ('/' INTEGER))*
///   unary   := '-' unary | power
///   power   := primary ('^' INTEGER)?
///   primary := INTEGER | IDENT | '(' expr ')'
///
/// Exponents are nonnegative integer literals; implicit multiplication is
/// rejected. Division is allowed only by a nonzero integer literal, which
/// makes every canonical rendering parseable.
///
/// Errors: ParseError with line/column; InputError for unknown names.
Polynomial parse_expression(std::string_view text, std::span<const std::string> variables,
                            const Field& field);

/// Variable names plus coefficient field.
struct Ring {
    Field field;
    std::vector<std::string> names;

    std::size_t nvars() const { return names.size(); }
    Polynomial parse(std::string_view text) const { return parse_expression(text, names, field); }
    std::string render(const Polynomial& p) const { return blowup::render(p, names); }
    Polynomial var(std::size_t i) const { return Polynomial::variable(field, names.size(), i); }
    Polynomial constant(long c) const { return Polynomial::constant(field, names.size(), c); }
};

/// Identifier shape accepted for variable names: [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);

}  // namespace blowup
