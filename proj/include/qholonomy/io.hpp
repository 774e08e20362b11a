#pragma once

// JSON, LaTeX and command-line text forms of the library's values.
//
// JSON schemas:
//   rational        [num, den]
//   path            [[x, y], ...] with x, y rationals
//   word            {"phase": r, "alpha": r, "beta": r}
//   element         [{"class": [m, n], "coeff": [{"qexp": r, "c": r}, ...]}, ...]
//   intersections   {"points": [{"pos": [x, y], "lift": r, "index": i}, ...], "total": d}
//   matrix          [[a, b], [c, d]]

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qholonomy/geometry.hpp"
#include "qholonomy/goldman.hpp"
#include "qholonomy/holonomy.hpp"
#include "qholonomy/intersections.hpp"
#include "qholonomy/loop_algebra.hpp"
#include "qholonomy/modular.hpp"

namespace qholo {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RatPoint& p);
Json to_json(const PLPath& p);
Json to_json(const HolonomyWord& w);
Json to_json(const QLaurent& c);
Json to_json(const AlgebraElement& e);
Json to_json(const IntersectionPoint& p);
Json intersections_to_json(std::span<const IntersectionPoint> points, long total);
Json to_json(const FundamentalReduction& r);
Json to_json(const ModularMatrix& M);
Json to_json(const Rerouting& r);
Json to_json(const BracketReport& r);
Json to_json(const RelationsReport& r);

// Parsers throw std::invalid_argument on schema violations.
Rational rational_from_json(const Json& j);
PLPath path_from_json(const Json& j);
HolonomyWord word_from_json(const Json& j);
AlgebraElement element_from_json(const Json& j);
std::vector<IntersectionPoint> intersections_from_json(const Json& j);

/// "x,y x,y ..." with rational coordinates.
PLPath parse_path(std::string_view text);
/// "m,n" with integer entries.
StraightLoop parse_loop(std::string_view text);
/// "S", "T", "I" or "a,b,c,d".
ModularMatrix parse_matrix(std::string_view text);

/// "q^{-3/2}-q^{3/2}", exponents ascending.
std::string to_latex(const QLaurent& c);
/// "T(3,3)" style symbol for a class.
std::string to_latex(const LoopClass& c);
/// Expanded form, one term per class in class order.
std::string to_latex(const AlgebraElement& e);
/// Factored form "(c)(T(a)-T(b))" when every coefficient is +-c for a single c,
/// with c the coefficient of the first class listed in `order`; classes not in
/// `order` follow in class order. Falls back to the expanded form otherwise.
std::string to_latex_factored(const AlgebraElement& e, std::span<const LoopClass> order);

std::string to_text(const PLPath& p);
std::string to_text(const HolonomyWord& w);
std::string to_text(const AlgebraElement& e);
std::string intersections_to_text(std::span<const IntersectionPoint> points, long total);
std::string to_text(const BracketReport& r);
std::string to_text(const RelationsReport& r);

}  // namespace qholo
