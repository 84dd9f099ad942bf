#pragma once

#include <span>
#include <string>
#include <string_view>

#include "phk/poly.hpp"
#include "phk/tensor.hpp"

namespace phk {

/// Parses a polynomial expression over the named variables.
///
///   expr     := [sign] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := primary ('^' nonneg-int)*
///   primary  := rational | name | '(' expr ')'
///   rational := int ['/' positive-int]
///
/// Whitespace is ignored. Errors throw ParseError with the byte offset.
Poly parse_poly_expr(std::string_view text, std::span<const std::string> names);

/// Parses a sum of pure tensors "P @ Q" where P and Q are terms of the
/// polynomial grammar (parenthesise sums: "(x+1)@y"). A bare "0" is the
/// zero tensor.
TensorPoly parse_tensor_expr(std::string_view text, std::span<const std::string> names);

/// Canonical text form; parse_poly_expr(format_poly(p)) == p.
std::string format_poly(const Poly& p, std::span<const std::string> names);
std::string format_tensor(const TensorPoly& t, std::span<const std::string> names);
std::string format_tensor(const TensorPoly3& t, std::span<const std::string> names);

/// A valid variable name: [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);

}  // namespace phk
