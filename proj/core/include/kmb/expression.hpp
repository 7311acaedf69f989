#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmb/laurent.hpp"
#include "kmb/number_field.hpp"
#include "kmb/rational.hpp"
#include "kmb/rational_function.hpp"

namespace kmb {

/// Scalar grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | x_<i> | t | a | '(' expr ')'
/// x_<i> is the field variable t_i (i may be negative, e.g. x_-2), t the
/// loop variable and a the number-field generator.
struct Expr {
    enum class Kind { integer, field_variable, loop_variable, generator, add, sub, mul, div, neg, pow };

    Kind kind;
    std::size_t position = 0;
    Integer value;      // integer literal
    long index = 0;     // field variable index, or exponent for pow
    std::vector<std::shared_ptr<const Expr>> children;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Throws ParseError(parse_error) with the offending byte position.
ExprPtr parse_expression(std::string_view text);

enum class RingTag { rational, function_field, laurent, number_field };

std::string to_string(RingTag tag);
/// "Q", "k", "laurent", "nf".
std::optional<RingTag> ring_tag_from_string(std::string_view name);

Rational parse_rational(std::string_view text);
/// Variables outside `window` (when given) are reported as unknown.
RationalFunction parse_rational_function(std::string_view text, std::optional<VariableWindow> window = std::nullopt);
LaurentPolynomial parse_laurent(std::string_view text, std::optional<VariableWindow> window = std::nullopt);
NFElement parse_nf(std::string_view text, const FieldPtr& field);

}  // namespace kmb
