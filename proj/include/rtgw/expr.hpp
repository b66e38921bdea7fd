#pragma once

// Expression parsing and rendering for the command line surface, plus the
// datum file loader. The grammar matches the kernel's notation: variables
// l<label>, generator letters x<label> and y<label>, shifts s<label>^n(...),
// star(...), perm{a,b}(...), the constants i and sqrt3, and + - * / ^ with
// parentheses. Whitespace is insignificant.

#include <rtgw/algebra.hpp>

#include <string>

namespace rtgw {

// Parses into a fully reduced element. Throws InputError for syntax errors
// (with byte position), unknown identifiers, non-scalar denominators,
// negative generator powers, and denominators outside the multiplicative
// set.
AlgebraElement parse_expr(const std::string& text, const Datum& d);

// Scalar-only variant used for datum file fields; generator letters are
// rejected.
RationalElement parse_scalar(const std::string& text, const RingContext& ctx,
                             const MultSetSpec& spec);

// Renders so that parse_expr reads back an equal element.
std::string render_expr(const AlgebraElement& a, const RingContext& ctx);

// Accepts the builtin names su3 and so3, otherwise a path to a JSON datum
// document. Structural defects are reported with the offending field path.
Datum load_datum(const std::string& name_or_path);

}  // namespace rtgw
