#pragma once

#include <string>
#include <vector>

#include "riocalc/poly.hpp"
#include "riocalc/riordan.hpp"

namespace riocalc {

/// Evaluates a series expression over {integer literals, x, + - * / ^,
/// c, t, sqrt1(...), parentheses}.  c and t may be applied to an argument
/// with zero constant term: c(expr) composes.
Series<Rational> eval_series_expr(const std::string& text, int order = kDefaultOrder);

/// A Riordan pair written "(g-expr, f-expr)", or a named family.
RiordanPair<Rational> eval_pair_expr(const std::string& text, int order = kDefaultOrder);

/// Named families: "main-theorem:m", "general:a,b", "k-theorem:k,m",
/// "gen-cheb:r,s,l,mu", "corollary:a,b", "rna".
bool is_family_name(const std::string& text);

/// The involution (or coefficient array, for gen-cheb) attached to a family.
RiordanPair<Rational> family_involution(const std::string& name, int order = kDefaultOrder);

/// The parameterized source array whose moments the family describes.
/// Defined for main-theorem, general and k-theorem families.
RiordanPair<Poly<Rational>> family_source(const std::string& name, int order = kDefaultOrder);

/// Sequence expressions: "coeffs <series>", "diagsums <pair>",
/// "rowsums <pair>", "absrowsums <pair>", "col <k> <pair>", or a bare
/// series expression.  Returns at least `terms` values.
std::vector<Rational> eval_seq_expr(const std::string& text, int terms);

}  // namespace riocalc
