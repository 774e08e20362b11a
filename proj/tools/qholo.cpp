// qholo: command-line front end for the quantum holonomy library.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input.

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qholonomy/geometry.hpp"
#include "qholonomy/goldman.hpp"
#include "qholonomy/holonomy.hpp"
#include "qholonomy/intersections.hpp"
#include "qholonomy/io.hpp"
#include "qholonomy/loop_algebra.hpp"
#include "qholonomy/modular.hpp"
#include "qholonomy/verify.hpp"

namespace {

using namespace qholo;

enum class Format { Text, Json, Latex };

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string latex_rational(const Rational& r) {
  const bool neg = r < 0;
  const Rational mag = neg ? Rational(-r) : r;
  std::string body = is_integer(mag) ? mag.get_num().get_str()
                                     : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
  return neg ? "-" + body : body;
}

std::string latex_path(const PLPath& p) {
  std::string out;
  for (const RatPoint& v : p.vertices()) {
    if (!out.empty()) out += " \\to ";
    out += "(" + latex_rational(v.x) + "," + latex_rational(v.y) + ")";
  }
  return out;
}

std::string latex_word(const HolonomyWord& w) {
  std::string exp_part = "\\exp\\left((" + latex_rational(w.alpha) + ")r_1+(" + latex_rational(w.beta) + ")r_2\\right)";
  if (w.phase == 0) return exp_part;
  return "q^{" + to_string(w.phase) + "}" + exp_part;
}

std::string bracket_latex(const AlgebraElement& e, const StraightLoop& p1, const StraightLoop& p2) {
  const LoopClass order[] = {LoopClass::canonical(p1.m() + p2.m(), p1.n() + p2.n()),
                             LoopClass::canonical(p1.m() - p2.m(), p1.n() - p2.n())};
  return to_latex_factored(e, order);
}

int run_area(const std::string& p_text, const std::optional<std::string>& q_text, Format fmt) {
  const PLPath p = parse_path(p_text);
  Rational area;
  if (q_text) {
    area = signed_area_between(p, parse_path(*q_text));
  } else {
    area = signed_area_loop(p);
  }
  switch (fmt) {
    case Format::Json: emit(Json{{"area", to_json(area)}}); break;
    case Format::Latex: std::cout << latex_rational(area) << "\n"; break;
    case Format::Text: std::cout << to_string(area) << "\n"; break;
  }
  return kOk;
}

int run_holonomy(const std::string& p_text, std::optional<double> r1, std::optional<double> r2,
                 std::optional<double> theta, Format fmt) {
  const PLPath p = parse_path(p_text);
  const HolonomyWord w = holonomy_of_path(p);
  const bool numeric = r1 || r2 || theta;
  const Eigen::Matrix2cd m = evaluate_numeric(w, r1.value_or(0.0), r2.value_or(0.0), QAngle{theta.value_or(0.0)});
  switch (fmt) {
    case Format::Json: {
      Json j{{"word", to_json(w)}};
      if (numeric) {
        j["numeric"] = Json::array({Json::array({m(0, 0).real(), m(0, 0).imag()}),
                                    Json::array({m(1, 1).real(), m(1, 1).imag()})});
      }
      emit(j);
      break;
    }
    case Format::Latex: std::cout << latex_word(w) << "\n"; break;
    case Format::Text:
      std::cout << to_text(w) << "\n";
      if (numeric) std::cout << "diag(" << m(0, 0) << ", " << m(1, 1) << ")\n";
      break;
  }
  return kOk;
}

int run_reduce(const std::string& loop_text, Format fmt) {
  const StraightLoop loop = parse_loop(loop_text);
  const FundamentalReduction r = fundamental_reduction(loop.m(), loop.n());
  if (fmt == Format::Json) {
    emit(to_json(r));
    return kOk;
  }
  for (const Segment& s : r.segments) {
    if (fmt == Format::Latex) {
      std::cout << "(" << latex_rational(s.from.x) << "," << latex_rational(s.from.y) << ") \\to ("
                << latex_rational(s.to.x) << "," << latex_rational(s.to.y) << ")\n";
    } else {
      std::cout << "(" << to_string(s.from.x) << "," << to_string(s.from.y) << ") -> (" << to_string(s.to.x) << ","
                << to_string(s.to.y) << ")\n";
    }
  }
  if (fmt == Format::Text) std::cout << "multiplicity " << r.multiplicity << "\n";
  return kOk;
}

int run_intersections(const std::string& a, const std::string& b, const std::string& mode, Format fmt) {
  const StraightLoop p1 = parse_loop(a);
  const StraightLoop p2 = parse_loop(b);
  const auto points = enumerate(p1, p2, mode == "lift" ? EnumerationMode::Lift : EnumerationMode::Geometric);
  const long total = total_intersection_number(p1, p2);
  switch (fmt) {
    case Format::Json: emit(intersections_to_json(points, total)); break;
    case Format::Latex:
      for (const IntersectionPoint& q : points) {
        std::cout << "(" << latex_rational(q.position.x) << "," << latex_rational(q.position.y)
                  << ") & " << to_string(q.lift_param) << " & " << q.index << " \\\\\n";
      }
      std::cout << "\\epsilon = " << total << "\n";
      break;
    case Format::Text: std::cout << intersections_to_text(points, total); break;
  }
  return kOk;
}

int run_reroute(const std::string& a, const std::string& b, const std::string& at, const std::string& sign_text,
                Format fmt) {
  const StraightLoop p1 = parse_loop(a);
  const StraightLoop p2 = parse_loop(b);
  int sign = 0;
  if (sign_text == "+" || sign_text == "+1") sign = 1;
  if (sign_text == "-" || sign_text == "-1") sign = -1;
  if (sign == 0) throw std::invalid_argument("sign must be + or -");
  const Rerouting r = reroute_at(p1, p2, parse_rational(at), sign);
  const AlgebraElement t = rerouting_trace(r);
  switch (fmt) {
    case Format::Json: emit(to_json(r)); break;
    case Format::Latex: std::cout << latex_path(r.path) << "\n" << to_latex(t) << "\n"; break;
    case Format::Text: std::cout << to_text(r.path) << "\n" << to_text(t) << "\n"; break;
  }
  return kOk;
}

int run_bracket(const std::string& a, const std::string& b, const std::string& form, Format fmt) {
  const StraightLoop p1 = parse_loop(a);
  const StraightLoop p2 = parse_loop(b);
  if (form == "both") {
    const BracketReport report = verify_bracket_equality(p1, p2);
    switch (fmt) {
      case Format::Json: emit(to_json(report)); break;
      case Format::Latex:
        std::cout << bracket_latex(report.straight, p1, p2) << " = " << bracket_latex(report.rerouted, p1, p2) << "\n";
        break;
      case Format::Text: std::cout << to_text(report); break;
    }
    if (!report.equal()) {
      std::cerr << "bracket forms differ\n";
      return kVerifyFailed;
    }
    return kOk;
  }
  AlgebraElement e;
  if (form == "straight") {
    e = commutator_straight(p1.m(), p1.n(), p2.m(), p2.n());
  } else if (form == "rerouted") {
    e = goldman_quantum(p1, p2);
  } else {
    e = goldman_classical(p1, p2);
  }
  switch (fmt) {
    case Format::Json: emit(to_json(e)); break;
    case Format::Latex: std::cout << bracket_latex(e, p1, p2) << "\n"; break;
    case Format::Text: std::cout << to_text(e) << "\n"; break;
  }
  return kOk;
}

int run_modular(const std::optional<std::string>& matrix, const std::optional<std::string>& p_text, Format fmt) {
  if (!p_text) {
    const RelationsReport report = check_relations(true);
    if (fmt == Format::Json) {
      emit(to_json(report));
    } else {
      std::cout << to_text(report);
    }
    return report.all_passed() ? kOk : kVerifyFailed;
  }
  const ModularMatrix M = parse_matrix(matrix.value_or("I"));
  const PLPath p = parse_path(*p_text);
  const PLPath image = act_on_path(M, p);
  const HolonomyWord w = holonomy_of_path(image);
  switch (fmt) {
    case Format::Json: emit(Json{{"matrix", to_json(M)}, {"path", to_json(image)}, {"word", to_json(w)}}); break;
    case Format::Latex: std::cout << latex_path(image) << "\n" << latex_word(w) << "\n"; break;
    case Format::Text: std::cout << to_text(image) << "\n" << to_text(w) << "\n"; break;
  }
  return kOk;
}

int run_verify(long sweep, std::uint64_t seed, int cases, Format fmt) {
  if (sweep < 1) throw std::invalid_argument("sweep must be positive");
  const VerifyReport report = run_verification(sweep, seed, cases);
  if (fmt == Format::Json) {
    Json j{{"sweep", report.sweep}, {"seed", report.seed}, {"suites", Json::array()}};
    for (const SuiteResult& s : report.suites) {
      Json t{{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"passed", s.passed()}};
      if (!s.passed()) t["first_failure"] = s.first_failure;
      j["suites"].push_back(std::move(t));
    }
    j["all_passed"] = report.all_passed();
    emit(j);
  } else {
    for (const SuiteResult& s : report.suites) {
      std::cout << (s.passed() ? "PASS  " : "FAIL  ") << s.name << "  (" << s.cases << " cases";
      if (!s.passed()) std::cout << ", " << s.failures << " failures; first: " << s.first_failure;
      std::cout << ")\n";
    }
    std::cout << (report.all_passed() ? "all suites passed" : "verification FAILED") << "\n";
  }
  return report.all_passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum holonomies of constant connections on the torus"};
  app.require_subcommand(1);

  Format fmt = Format::Text;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(formats));
  };

  std::string p_text, p1_text, p2_text, at_text, sign_text = "+", form = "both", mode = "geometric", loop_text;
  std::optional<std::string> q_text, matrix_text, path_text;
  std::optional<double> r1, r2, theta;
  long sweep = 6;
  std::uint64_t seed = 20041201;
  int cases = 200;

  auto* area = app.add_subcommand("area", "Signed area of a closed path, or between two paths");
  area->add_option("--p", p_text, "Path, e.g. \"0,0 1,0 1,1\"")->required();
  area->add_option("--q", q_text, "Second path with the same endpoints");
  add_format(area);

  auto* holonomy = app.add_subcommand("holonomy", "Holonomy word of a path");
  holonomy->add_option("--p", p_text, "Path")->required();
  holonomy->add_option("--r1", r1, "Numeric r1");
  holonomy->add_option("--r2", r2, "Numeric r2");
  holonomy->add_option("--theta", theta, "q = exp(i theta)");
  add_format(holonomy);

  auto* reduce = app.add_subcommand("reduce", "Fundamental reduction of a straight loop");
  reduce->add_option("--loop", loop_text, "Loop m,n")->required();
  add_format(reduce);

  auto* inter = app.add_subcommand("intersections", "Intersection points of two straight loops");
  inter->add_option("--p1", p1_text, "First loop m,n")->required();
  inter->add_option("--p2", p2_text, "Second loop s,t")->required();
  inter->add_option("--mode", mode, "geometric or lift")->check(CLI::IsMember({"geometric", "lift"}));
  add_format(inter);

  auto* rer = app.add_subcommand("reroute", "Rerouted path at a crossing along p1");
  rer->add_option("--p1", p1_text, "First loop m,n")->required();
  rer->add_option("--p2", p2_text, "Second loop s,t")->required();
  rer->add_option("--at", at_text, "Lift parameter of the crossing, e.g. 1/3")->required();
  rer->add_option("--sign", sign_text, "+ or -");
  add_format(rer);

  auto* bracket = app.add_subcommand("bracket", "Quantum bracket of two straight loops");
  bracket->add_option("--p1", p1_text, "First loop m,n")->required();
  bracket->add_option("--p2", p2_text, "Second loop s,t")->required();
  bracket->add_option("--form", form, "straight, rerouted, both or classical")
      ->check(CLI::IsMember({"straight", "rerouted", "both", "classical"}));
  add_format(bracket);

  auto* modular = app.add_subcommand("modular", "SL(2,Z) action, or the relation checks when no path is given");
  modular->add_option("--matrix", matrix_text, "S, T, I or a,b,c,d");
  modular->add_option("--p", path_text, "Path to transform");
  add_format(modular);

  auto* verify = app.add_subcommand("verify", "Run the identity suites");
  verify->add_option("--sweep", sweep, "Integer sweep bound");
  verify->add_option("--seed", seed, "Seed for randomized suites");
  verify->add_option("--cases", cases, "Randomized cases per suite");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    if (*area) return run_area(p_text, q_text, fmt);
    if (*holonomy) return run_holonomy(p_text, r1, r2, theta, fmt);
    if (*reduce) return run_reduce(loop_text, fmt);
    if (*inter) return run_intersections(p1_text, p2_text, mode, fmt);
    if (*rer) return run_reroute(p1_text, p2_text, at_text, sign_text, fmt);
    if (*bracket) return run_bracket(p1_text, p2_text, form, fmt);
    if (*modular) return run_modular(matrix_text, path_text, fmt);
    if (*verify) return run_verify(sweep, seed, cases, fmt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
