#include "qholonomy/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qholo {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

long parse_long(std::string_view s) {
  return to_long(parse_rational(s));
}

long json_long(const Json& j) {
  if (!j.is_number_integer()) throw std::invalid_argument("expected an integer, got " + j.dump());
  return j.get<long>();
}

std::string latex_number(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string text_number(const Rational& r) { return to_string(r); }

// Magnitude and sign split out so callers can join terms with + / -.
std::string monomial_body(const Rational& exponent, const Rational& magnitude, bool latex) {
  std::string out;
  const bool unit = magnitude == 1;
  if (exponent == 0) return latex ? latex_number(magnitude) : text_number(magnitude);
  if (!unit) out += latex ? latex_number(magnitude) : text_number(magnitude) + "*";
  if (exponent == 1) return out + "q";
  if (latex) return out + "q^{" + to_string(exponent) + "}";
  return out + "q^" + (is_integer(exponent) ? to_string(exponent) : "(" + to_string(exponent) + ")");
}

std::string laurent_string(const QLaurent& c, bool latex) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, coeff] : c.terms()) {
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += latex ? (negative ? "-" : "+") : (negative ? " - " : " + ");
    }
    out += monomial_body(k, magnitude, latex);
    first = false;
  }
  return out;
}

std::string class_symbol(const LoopClass& c) {
  return "T(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
}

// c T(class) as a signed term; `leading` is true for the first term of a sum.
std::string term_string(const QLaurent& c, const LoopClass& cls, bool latex, bool leading) {
  const std::string sym = class_symbol(cls);
  std::string sign;
  std::string body;
  if (c.terms().size() == 1) {
    const auto& [k, coeff] = *c.terms().begin();
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    sign = negative ? "-" : "+";
    if (k == 0 && magnitude == 1) {
      body = sym;
    } else {
      body = monomial_body(k, magnitude, latex) + (latex ? "" : "*") + sym;
    }
  } else {
    sign = "+";
    body = "(" + laurent_string(c, latex) + ")" + (latex ? "" : "*") + sym;
  }
  if (leading) return sign == "-" ? "-" + body : body;
  if (latex) return sign + body;
  return " " + sign + " " + body;
}

std::string element_string(const AlgebraElement& e, bool latex) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [cls, c] : e.terms()) {
    out += term_string(c, cls, latex, first);
    first = false;
  }
  return out;
}

Json point_json(const IntersectionPoint& p) {
  Json j;
  j["pos"] = to_json(p.position);
  j["lift"] = to_json(p.lift_param);
  j["index"] = p.index;
  return j;
}

}  // namespace

Json to_json(const Rational& r) {
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) {
    throw std::overflow_error("rational too large for JSON integers: " + to_string(r));
  }
  return Json::array({r.get_num().get_si(), r.get_den().get_si()});
}

Json to_json(const RatPoint& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Json to_json(const PLPath& p) {
  Json j = Json::array();
  for (const RatPoint& v : p.vertices()) j.push_back(to_json(v));
  return j;
}

Json to_json(const HolonomyWord& w) {
  Json j;
  j["phase"] = to_json(w.phase);
  j["alpha"] = to_json(w.alpha);
  j["beta"] = to_json(w.beta);
  return j;
}

Json to_json(const QLaurent& c) {
  Json j = Json::array();
  for (const auto& [k, coeff] : c.terms()) {
    Json t;
    t["qexp"] = to_json(k);
    t["c"] = to_json(coeff);
    j.push_back(std::move(t));
  }
  return j;
}

Json to_json(const AlgebraElement& e) {
  Json j = Json::array();
  for (const auto& [cls, c] : e.terms()) {
    Json t;
    t["class"] = Json::array({cls.m, cls.n});
    t["coeff"] = to_json(c);
    j.push_back(std::move(t));
  }
  return j;
}

Json to_json(const IntersectionPoint& p) { return point_json(p); }

Json intersections_to_json(std::span<const IntersectionPoint> points, long total) {
  Json j;
  j["points"] = Json::array();
  for (const IntersectionPoint& p : points) j["points"].push_back(point_json(p));
  j["total"] = total;
  return j;
}

Json to_json(const FundamentalReduction& r) {
  Json j;
  j["loop"] = Json::array({r.m, r.n});
  j["multiplicity"] = r.multiplicity;
  j["segments"] = Json::array();
  for (const Segment& s : r.segments) j["segments"].push_back(Json::array({to_json(s.from), to_json(s.to)}));
  return j;
}

Json to_json(const ModularMatrix& M) {
  return Json::array({Json::array({M.a(), M.b()}), Json::array({M.c(), M.d()})});
}

Json to_json(const Rerouting& r) {
  Json j;
  j["p1"] = Json::array({r.base1.m(), r.base1.n()});
  j["p2"] = Json::array({r.base2.m(), r.base2.n()});
  j["at"] = point_json(r.at);
  j["sign"] = r.sign;
  j["path"] = to_json(r.path);
  j["trace"] = to_json(rerouting_trace(r));
  return j;
}

Json to_json(const BracketReport& r) {
  Json j;
  j["p1"] = Json::array({r.p1.m(), r.p1.n()});
  j["p2"] = Json::array({r.p2.m(), r.p2.n()});
  j["total_intersection"] = r.total_intersection;
  j["straight"] = to_json(r.straight);
  j["rerouted"] = to_json(r.rerouted);
  j["difference"] = to_json(r.difference);
  j["classical"] = to_json(r.classical);
  j["equal"] = r.equal();
  j["reroutings"] = Json::array();
  for (const RerouteRow& row : r.rows) {
    Json t;
    t["at"] = point_json(row.at);
    t["positive"] = {{"path", to_json(row.positive_path)}, {"trace", to_json(row.positive)}};
    t["negative"] = {{"path", to_json(row.negative_path)}, {"trace", to_json(row.negative)}};
    j["reroutings"].push_back(std::move(t));
  }
  j["geometric_points"] = intersections_to_json(r.geometric_points, r.total_intersection)["points"];
  return j;
}

Json to_json(const RelationsReport& r) {
  Json j;
  j["classical_variant"] = r.classical_variant;
  j["checks"] = Json::array();
  for (const RelationCheck& c : r.checks) {
    Json t;
    t["name"] = c.name;
    t["passed"] = c.passed;
    if (!c.detail.empty()) t["detail"] = c.detail;
    j["checks"].push_back(std::move(t));
  }
  j["all_passed"] = r.all_passed();
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]: " + j.dump());
  const long num = json_long(j[0]);
  const long den = json_long(j[1]);
  if (den == 0) throw std::invalid_argument("zero denominator in " + j.dump());
  return make_rational(num, den);
}

PLPath path_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("path must be an array of points");
  std::vector<RatPoint> v;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("point must be [x, y]: " + p.dump());
    v.emplace_back(rational_from_json(p[0]), rational_from_json(p[1]));
  }
  return PLPath(std::move(v));
}

HolonomyWord word_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("word must be an object");
  return {rational_from_json(j.at("phase")), rational_from_json(j.at("alpha")), rational_from_json(j.at("beta"))};
}

AlgebraElement element_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("element must be an array of terms");
  AlgebraElement e;
  for (const Json& t : j) {
    const Json& cls = t.at("class");
    if (!cls.is_array() || cls.size() != 2) throw std::invalid_argument("class must be [m, n]");
    QLaurent c;
    for (const Json& mono : t.at("coeff")) {
      c += QLaurent::monomial(rational_from_json(mono.at("qexp")), rational_from_json(mono.at("c")));
    }
    e.add_term(json_long(cls[0]), json_long(cls[1]), c);
  }
  return e;
}

std::vector<IntersectionPoint> intersections_from_json(const Json& j) {
  std::vector<IntersectionPoint> out;
  for (const Json& p : j.at("points")) {
    const Json& pos = p.at("pos");
    if (!pos.is_array() || pos.size() != 2) throw std::invalid_argument("pos must be [x, y]");
    out.push_back({RatPoint(rational_from_json(pos[0]), rational_from_json(pos[1])),
                   rational_from_json(p.at("lift")), json_long(p.at("index"))});
  }
  return out;
}

PLPath parse_path(std::string_view text) {
  std::vector<RatPoint> v;
  for (std::string_view token : split_whitespace(text)) {
    const auto xy = split(token, ',');
    if (xy.size() != 2) throw std::invalid_argument("malformed vertex '" + std::string(token) + "'");
    v.emplace_back(parse_rational(xy[0]), parse_rational(xy[1]));
  }
  return PLPath(std::move(v));
}

StraightLoop parse_loop(std::string_view text) {
  const auto mn = split(text, ',');
  if (mn.size() != 2) throw std::invalid_argument("malformed loop '" + std::string(text) + "', expected m,n");
  return {parse_long(mn[0]), parse_long(mn[1])};
}

ModularMatrix parse_matrix(std::string_view text) {
  if (text == "S") return ModularMatrix::S();
  if (text == "T") return ModularMatrix::T();
  if (text == "I") return ModularMatrix::identity();
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw std::invalid_argument("malformed matrix '" + std::string(text) + "'");
  return {parse_long(parts[0]), parse_long(parts[1]), parse_long(parts[2]), parse_long(parts[3])};
}

std::string to_latex(const QLaurent& c) { return laurent_string(c, true); }

std::string to_latex(const LoopClass& c) { return class_symbol(c); }

std::string to_latex(const AlgebraElement& e) { return element_string(e, true); }

std::string to_latex_factored(const AlgebraElement& e, std::span<const LoopClass> order) {
  if (e.terms().size() < 2) return to_latex(e);
  std::vector<LoopClass> classes;
  for (const LoopClass& c : order) {
    if (e.terms().contains(c) && std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
  }
  for (const auto& [cls, c] : e.terms()) {
    if (std::find(classes.begin(), classes.end(), cls) == classes.end()) classes.push_back(cls);
  }
  const QLaurent& factor = e.terms().at(classes.front());
  const QLaurent negated = -factor;
  std::string inner;
  for (const LoopClass& cls : classes) {
    const QLaurent& c = e.terms().at(cls);
    if (c == factor) {
      inner += (inner.empty() ? "" : "+") + class_symbol(cls);
    } else if (c == negated) {
      inner += "-" + class_symbol(cls);
    } else {
      return to_latex(e);
    }
  }
  if (factor == QLaurent::constant(1)) return inner;
  std::string prefix = laurent_string(factor, true);
  if (factor.terms().size() > 1) prefix = "(" + prefix + ")";
  return prefix + "(" + inner + ")";
}

std::string to_text(const PLPath& p) {
  std::string out;
  for (const RatPoint& v : p.vertices()) {
    if (!out.empty()) out += " -> ";
    out += "(" + to_string(v.x) + "," + to_string(v.y) + ")";
  }
  return out;
}

std::string to_text(const HolonomyWord& w) {
  return "q^(" + to_string(w.phase) + ") exp((" + to_string(w.alpha) + ") r1 + (" + to_string(w.beta) + ") r2)";
}

std::string to_text(const AlgebraElement& e) { return element_string(e, false); }

std::string intersections_to_text(std::span<const IntersectionPoint> points, long total) {
  std::ostringstream os;
  os << "lift       position          index\n";
  for (const IntersectionPoint& p : points) {
    std::string pos = "(" + to_string(p.position.x) + "," + to_string(p.position.y) + ")";
    std::string lift = to_string(p.lift_param);
    os << lift << std::string(lift.size() < 11 ? 11 - lift.size() : 1, ' ') << pos
       << std::string(pos.size() < 18 ? 18 - pos.size() : 1, ' ') << (p.index > 0 ? "+" : "") << p.index << "\n";
  }
  os << "total " << (total > 0 ? "+" : "") << total << "\n";
  return os.str();
}

std::string to_text(const BracketReport& r) {
  std::ostringstream os;
  os << "[T(" << r.p1.m() << "," << r.p1.n() << "), T(" << r.p2.m() << "," << r.p2.n() << ")]\n";
  os << "total intersection " << r.total_intersection << "\n";
  os << "straight:  " << to_text(r.straight) << "\n";
  os << "rerouted:  " << to_text(r.rerouted) << "\n";
  os << "classical: " << to_text(r.classical) << "\n";
  for (const RerouteRow& row : r.rows) {
    os << "  at lift " << to_string(row.at.lift_param) << " exponent " << row.at.index << ": +  "
       << to_text(row.positive) << "   -  " << to_text(row.negative) << "\n";
  }
  os << "difference: " << to_text(r.difference) << (r.equal() ? "  (equal)" : "  (MISMATCH)") << "\n";
  return os.str();
}

std::string to_text(const RelationsReport& r) {
  std::ostringstream os;
  for (const RelationCheck& c : r.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << (r.all_passed() ? "all relations hold" : "relation failures") << "\n";
  return os.str();
}

}  // namespace qholo
