#pragma once

// The simpson-nd command line: verify, moments, derive, family, compound,
// catalog. Every subcommand builds a JSON report and renders it as text,
// JSON or CSV.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simpson/claims.hpp"
#include "simpson/expr.hpp"
#include "simpson/json.hpp"

namespace simpson::cli {

enum class Format { Text, Json, Csv };

/// Bad flags or values: exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("unknown format '" + s + "' (expected text, json or csv)");
}

inline std::string decimal(const Scalar& s, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << s.to_double();
  return os.str();
}

inline std::string decimal(double v, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// simplex:N, cube:N, disc, trapezoid-paper, hexagon-paper, triangle.
inline Region parse_region(const std::string& text) {
  auto dim_after = [&](std::size_t prefix) -> unsigned {
    const std::string digits = text.substr(prefix);
    if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad dimension in region '" + text + "'");
    const int n = std::stoi(digits);
    if (n < 1 || n > 12) throw UsageError("region dimension must be in 1..12");
    return static_cast<unsigned>(n);
  };
  if (text.rfind("simplex:", 0) == 0) return Simplex{dim_after(8)};
  if (text.rfind("cube:", 0) == 0) return Cube{dim_after(5)};
  if (text == "disc") return UnitDisc{};
  if (text == "trapezoid-paper" || text == "trapezoid") return trapezoid_region();
  if (text == "hexagon-paper" || text == "hexagon") return hexagon_region();
  if (text == "triangle") return standard_triangle_polygon();
  throw UsageError("unknown region '" + text + "' (simplex:N, cube:N, disc, trapezoid-paper, hexagon-paper)");
}

inline Region resolve_region(const std::string& name, const std::string& file) {
  if (!file.empty()) return region_from_json(read_json_file(file));
  if (name.empty()) throw UsageError("a region is required (--region or --region-file)");
  return parse_region(name);
}

/// Named rule from flags; dimension defaults to 2 where it applies.
inline CubatureRule resolve_rule(const std::string& name, unsigned dim, const std::string& file) {
  if (!file.empty()) return rule_from_json(read_json_file(file));
  if (name.empty()) throw UsageError("a rule is required (--rule or --rule-file)");
  const auto id = parse_rule_name(name);
  if (!id) throw UsageError("unknown rule '" + name + "' (CR1..CR6, CR5-conjugate, TriangleMidedge)");
  if (rule_takes_dimension(*id) && (dim < 1 || dim > 12)) throw UsageError("--dim must be in 1..12");
  return named_rule(*id, dim);
}

/// "deg2", or a comma-separated list of monomials such as "x^2,x*y".
inline std::vector<MultiIndex> parse_targets(const std::string& text, std::size_t n) {
  if (text.rfind("deg", 0) == 0) {
    const std::string k = text.substr(3);
    if (k.empty() || k.size() > 2 || k.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad target degree '" + text + "'");
    return degree_targets(n, static_cast<unsigned>(std::stoi(k)));
  }
  std::vector<MultiIndex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const MonomialPoly p = to_monomial_poly(*parse_expr(item), n);
    if (p.terms().size() != 1 || p.terms().begin()->second != Rational(1))
      throw UsageError("target '" + item + "' is not a single monic monomial");
    out.push_back(p.terms().begin()->first);
  }
  if (out.empty()) throw UsageError("no targets given");
  return out;
}

/// "x,y;x,y;..." with exact coordinates such as 1/2 or 1+sqrt(3).
inline std::vector<Point> parse_nodes(const std::string& text) {
  std::vector<Point> out;
  std::stringstream ss(text);
  std::string node;
  while (std::getline(ss, node, ';')) {
    if (node.find_first_not_of(" \t") == std::string::npos) continue;
    Point p;
    std::stringstream cs(node);
    std::string coord;
    while (std::getline(cs, coord, ',')) p.push_back(parse_scalar(coord));
    out.push_back(std::move(p));
  }
  if (out.empty()) throw UsageError("no nodes given");
  return out;
}

inline Json targets_json(const std::vector<MultiIndex>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(t.exponents());
  return out;
}

inline Json scalars_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

struct Output {
  std::ostream& out;
  Format format;
};

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string rule, rule_file;
  unsigned dim = 2;
  int max_degree = -1;
  bool all = false;
};

inline int cmd_verify(const VerifyOptions& o, Output& io) {
  if (o.all) {
    const auto results = run_all_claims();
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    if (io.format == Format::Json) {
      Json arr = Json::array();
      for (const auto& r : results) arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"notes", r.notes}});
      io.out << Json{{"claims", arr}, {"all_passed", ok}}.dump(2) << "\n";
    } else if (io.format == Format::Csv) {
      io.out << "id,passed,title\n";
      for (const auto& r : results) io.out << r.id << "," << (r.passed ? "true" : "false") << "," << csv_field(r.title) << "\n";
    } else {
      for (const auto& r : results) {
        io.out << (r.passed ? "PASS " : "FAIL ") << std::setw(2) << r.id << "  " << r.title << "\n";
        for (const auto& n : r.notes) io.out << "        " << n << "\n";
      }
      int passed = 0;
      for (const auto& r : results) passed += r.passed ? 1 : 0;
      io.out << passed << "/" << results.size() << " claims reproduced\n";
    }
    return ok ? 0 : 1;
  }
  const CubatureRule rule = resolve_rule(o.rule, o.dim, o.rule_file);
  std::optional<int> claimed;
  if (o.rule_file.empty()) claimed = claimed_degree(*parse_rule_name(o.rule));
  const int max_degree = o.max_degree >= 0 ? o.max_degree : (claimed ? *claimed + 2 : 6);
  const ExactnessReport rep = exactness_degree(rule, max_degree);
  const bool confirmed = !claimed || rep.degree == *claimed;
  if (io.format == Format::Json) {
    Json j = to_json(rep);
    j["region"] = rule.region().describe();
    if (claimed) {
      j["claimed_degree"] = *claimed;
      j["confirmed"] = confirmed;
    }
    io.out << j.dump(2) << "\n";
  } else if (io.format == Format::Csv) {
    io.out << "label,region,degree,failing,residual,tested\n";
    io.out << csv_field(rep.label) << "," << csv_field(rule.region().describe()) << "," << rep.degree << ","
           << (rep.failing ? rep.failing->label() : "") << ","
           << csv_field(rep.failing_residual ? rep.failing_residual->to_string() : "") << "," << rep.tested << "\n";
  } else {
    io.out << "rule:              " << rep.label << " on " << rule.region().describe() << "\n";
    io.out << "certified degree:  " << rep.degree << " (monomials tested up to degree " << rep.tested << ")\n";
    if (rep.failing) {
      io.out << "first failure:     " << rep.failing->label() << "\n";
      io.out << "residual:          " << rep.failing_residual->to_string() << " ~ " << decimal(*rep.failing_residual)
             << "\n";
    } else {
      io.out << "first failure:     none up to degree " << rep.tested << "\n";
    }
    if (claimed)
      io.out << "claimed degree:    " << *claimed << (confirmed ? " (confirmed)" : " (NOT confirmed)") << "\n";
  }
  return confirmed ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct MomentsOptions {
  std::string region, region_file;
  int degree = 2;
};

inline int cmd_moments(const MomentsOptions& o, Output& io) {
  if (o.degree < 0 || o.degree > 40) throw UsageError("--degree must be in 0..40");
  const Region region = resolve_region(o.region, o.region_file);
  const auto alphas = monomials_display_order(region.dimension(), static_cast<unsigned>(o.degree));
  std::vector<Scalar> values;
  for (const auto& a : alphas) values.push_back(moment(region, a));
  if (io.format == Format::Json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < alphas.size(); ++i)
      rows.push_back({{"alpha", alphas[i].exponents()}, {"monomial", alphas[i].label()}, {"value", to_json(values[i])}});
    io.out << Json{{"region", to_json(region)}, {"degree", o.degree}, {"moments", rows}}.dump(2) << "\n";
  } else if (io.format == Format::Csv) {
    io.out << "monomial,exact,decimal\n";
    for (std::size_t i = 0; i < alphas.size(); ++i)
      io.out << csv_field(alphas[i].label()) << "," << csv_field(values[i].to_string()) << "," << decimal(values[i])
             << "\n";
  } else {
    io.out << "moments of " << region.describe() << " up to degree " << o.degree << "\n";
    for (std::size_t i = 0; i < alphas.size(); ++i) io.out << alphas[i].label() << " = " << values[i].to_string() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct DeriveOptions {
  std::string region, region_file, targets = "deg2", exclude, mode = "lambda", nodes;
};

inline int cmd_derive(const DeriveOptions& o, Output& io) {
  const Region region = resolve_region(o.region, o.region_file);
  const std::size_t n = region.dimension();
  std::vector<MultiIndex> targets = parse_targets(o.targets, n);
  if (!o.exclude.empty()) {
    const auto ex = parse_targets(o.exclude, n);
    std::erase_if(targets, [&](const MultiIndex& a) { return std::find(ex.begin(), ex.end(), a) != ex.end(); });
  }
  LinearSolveOutcome outcome;
  std::vector<Point> nodes;
  if (o.mode == "lambda") {
    const CubatureRule m = midpoint_rule(region);
    const CubatureRule t = o.nodes.empty() ? vertex_rule(region) : boundary_rule(region, parse_nodes(o.nodes));
    nodes = t.nodes();
    outcome = solve_lambda(m, t, targets);
  } else if (o.mode == "weights") {
    if (o.nodes.empty()) {
      nodes.push_back(centroid(region));
      for (auto& v : vertices(region)) nodes.push_back(std::move(v));
    } else {
      nodes = parse_nodes(o.nodes);
    }
    outcome = solve_weights(region, nodes, targets);
  } else {
    throw UsageError("--mode must be lambda or weights");
  }

  Json j{{"region", to_json(region)}, {"mode", o.mode}, {"targets", targets_json(targets)}};
  Json node_list = Json::array();
  for (const auto& p : nodes) node_list.push_back(to_json(p));
  j["nodes"] = node_list;
  std::string kind;
  std::vector<std::string> text;
  std::vector<std::pair<std::string, Scalar>> csv_rows;
  const std::string unknown = o.mode == "lambda" ? "lambda" : "w";
  if (const auto* u = std::get_if<UniqueSolution>(&outcome)) {
    kind = "unique";
    j["values"] = scalars_json(u->values);
    for (std::size_t i = 0; i < u->values.size(); ++i) {
      const std::string name = o.mode == "lambda" ? unknown : unknown + std::to_string(i + 1);
      text.push_back(name + " = " + u->values[i].to_string() + "  (~ " + decimal(u->values[i]) + ")");
      csv_rows.emplace_back(name, u->values[i]);
    }
  } else if (const auto* f = std::get_if<Infeasible>(&outcome)) {
    kind = "infeasible";
    j["certificate"] = scalars_json(f->certificate);
    j["rows"] = f->rows;
    j["inconsistency"] = to_json(f->inconsistency);
    j["witness"] = f->description;
    text.push_back("witness: " + f->description);
    std::string rows;
    for (auto r : f->rows) rows += (rows.empty() ? "" : ", ") + targets[r].label();
    text.push_back("equations combined: " + rows);
    text.push_back("combination reduces to 0 = " + f->inconsistency.to_string());
  } else {
    const auto& d = std::get<Underdetermined>(outcome);
    kind = "underdetermined";
    j["particular"] = scalars_json(d.particular);
    j["nullity"] = d.nullity;
    text.push_back("solution space has dimension " + std::to_string(d.nullity));
    for (std::size_t i = 0; i < d.particular.size(); ++i) {
      const std::string name = o.mode == "lambda" ? unknown : unknown + std::to_string(i + 1);
      text.push_back("particular " + name + " = " + d.particular[i].to_string());
      csv_rows.emplace_back(name, d.particular[i]);
    }
  }
  j["outcome"] = kind;
  if (io.format == Format::Json) {
    io.out << j.dump(2) << "\n";
  } else if (io.format == Format::Csv) {
    io.out << "outcome,unknown,exact,decimal\n";
    if (csv_rows.empty()) io.out << kind << ",,,\n";
    for (const auto& [name, v] : csv_rows)
      io.out << kind << "," << name << "," << csv_field(v.to_string()) << "," << decimal(v) << "\n";
  } else {
    io.out << "derive " << o.mode << " on " << region.describe() << " with " << targets.size() << " targets: " << kind
           << "\n";
    for (const auto& line : text) io.out << "  " << line << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct FamilyOptions {
  std::string system = "triangle";
  std::string param;
};

inline Json residuals_json(const SystemResiduals& r) {
  Json out = Json::array();
  for (std::size_t i = 0; i < r.names.size(); ++i) out.push_back({{"f", r.names[i]}, {"residual", to_json(r.residuals[i])}});
  return out;
}

inline int cmd_family(const FamilyOptions& o, Output& io) {
  Json report{{"system", o.system}};
  Json cases = Json::array();
  std::ostringstream text;
  std::vector<std::vector<std::string>> csv;  // case,f,residual
  auto add_residuals = [&](const std::string& label, const SystemResiduals& r) {
    for (std::size_t i = 0; i < r.names.size(); ++i) {
      csv.push_back({label, r.names[i], r.residuals[i].to_string()});
      text << "    " << std::left << std::setw(22) << r.names[i] << r.residuals[i].to_string() << "\n";
    }
  };
  auto params = [&](std::vector<Rational> defaults) {
    if (o.param.empty()) return defaults;
    return std::vector<Rational>{Rational::parse(o.param)};
  };
  bool all_ok = true;

  if (o.system == "triangle") {
    for (const auto& c : params({Rational(0), Rational(1, 2), Rational(1, 3)})) {
      const auto chk = verify_triangle_family(c);
      const std::string label = "c=" + c.to_string();
      text << label << ": lambda = " << chk.lambda.to_string() << ", residuals "
           << (chk.solves ? "all zero" : "NOT all zero") << "\n";
      add_residuals(label, chk.residuals);
      text << "    printed lambda " << chk.printed_lambda.to_string()
           << (chk.printed_lambda_matches ? " (matches)" : " (differs)") << "\n";
      text << "    printed 1-lambda " << triangle_printed_one_minus_lambda(chk.c).to_string()
           << (chk.printed_one_minus_lambda_matches ? " (matches)" : " (differs)") << "\n";
      text << "    x^2 selector value " << chk.selector_value.to_string() << "\n";
      all_ok = all_ok && chk.solves;
      cases.push_back({{"c", to_json(Scalar(c))},
                       {"lambda", to_json(Scalar(chk.lambda))},
                       {"solves", chk.solves},
                       {"residuals", residuals_json(chk.residuals)},
                       {"printed_lambda", to_json(Scalar(chk.printed_lambda))},
                       {"printed_lambda_matches", chk.printed_lambda_matches},
                       {"printed_one_minus_lambda_matches", chk.printed_one_minus_lambda_matches},
                       {"selector_value", to_json(Scalar(chk.selector_value))}});
    }
    const auto roots = rational_roots(triangle_selector_polynomial());
    Json rj = Json::array();
    text << "selector " << triangle_selector_polynomial().to_string("c") << " has rational roots:";
    for (const auto& r : roots) {
      rj.push_back(to_json(Scalar(r)));
      text << " " << r.to_string();
    }
    text << "\n";
    report["selector_roots"] = rj;
  } else if (o.system == "square") {
    for (const auto& d : params({Rational(0), Rational(1, 2), Rational(1, 4)})) {
      const auto chk = verify_square_family(d);
      const std::string label = "d=" + d.to_string();
      text << label << ": lambda = " << chk.lambda.to_string() << ", residuals "
           << (chk.solves ? "all zero" : "NOT all zero") << "\n";
      add_residuals(label, chk.residuals);
      text << "    x^3y residual " << chk.x3y_residual.to_string()
           << (chk.printed_x3y_matches ? " (printed form matches)" : " (printed form differs)") << "\n";
      all_ok = all_ok && chk.solves;
      cases.push_back({{"d", to_json(Scalar(d))},
                       {"lambda", to_json(Scalar(chk.lambda))},
                       {"solves", chk.solves},
                       {"residuals", residuals_json(chk.residuals)},
                       {"x3y_residual", to_json(chk.x3y_residual)}});
    }
    const auto roots = rational_roots(square_selector_polynomial());
    Json rj = Json::array();
    text << "selector " << square_selector_polynomial().to_string("d") << " has rational roots:";
    for (const auto& r : roots) {
      rj.push_back(to_json(Scalar(r)));
      text << " " << r.to_string();
    }
    text << "\n";
    const Rational disc = square_lambda_numerator().discriminant();
    text << "lambda numerator 6d^2 - 6d + 2 has discriminant " << disc.to_string()
         << (disc.sign() < 0 ? ", so lambda is never 0" : "") << "\n";
    report["selector_roots"] = rj;
    report["lambda_numerator_discriminant"] = to_json(Scalar(disc));
  } else if (o.system == "trapezoid") {
    if (!o.param.empty()) throw UsageError("the trapezoid system takes no --param");
    for (const auto& [label, p] : {std::pair{std::string("CR5"), cr5_parameters()},
                                   std::pair{std::string("CR5-conjugate"), cr5_conjugate_parameters()}}) {
      const auto sys = trapezoid_system(p);
      const auto basis = trapezoid_basis_residuals(p);
      text << label << ": d = " << p.d.to_string() << ", lambda = " << p.lambda.to_string() << "\n";
      add_residuals(label, sys);
      add_residuals(label, basis);
      all_ok = all_ok && sys.all_zero() && basis.all_zero();
      cases.push_back({{"label", label},
                       {"a", to_json(p.a)},
                       {"b", to_json(p.b)},
                       {"c", to_json(p.c)},
                       {"d", to_json(p.d)},
                       {"lambda", to_json(p.lambda)},
                       {"residuals", residuals_json(sys)},
                       {"basis", residuals_json(basis)}});
    }
  } else if (o.system == "simplex3") {
    FaceParameters p;
    p.fill(Scalar(Rational(1, 3)));
    const Scalar lambda = o.param.empty() ? Scalar(Rational(-4, 5)) : Scalar(Rational::parse(o.param));
    const auto sys = simplex3_face_system(p, lambda);
    text << "face centroids, lambda = " << lambda.to_string() << "\n";
    add_residuals("face-centroids", sys);
    all_ok = all_ok && sys.all_zero();
    cases.push_back({{"a", scalars_json(std::vector<Scalar>(p.begin(), p.end()))},
                     {"lambda", to_json(lambda)},
                     {"residuals", residuals_json(sys)}});
    const Scalar vl = Rational(4, 5);
    const auto sols = simplex3_vertex_solutions(vl);
    text << sols.size() << " vertex placements solve the system with lambda = 4/5";
    Json vs = Json::array();
    for (const auto& s : sols) {
      std::string t;
      for (const auto& a : s) t += (t.empty() ? "" : ",") + a.to_string();
      vs.push_back(t);
    }
    if (!sols.empty()) text << ", e.g. (a1..a8) = (" << vs[0].get<std::string>() << ")";
    text << "\n";
    report["vertex_solutions"] = vs;
  } else {
    throw UsageError("--system must be triangle, square, trapezoid or simplex3");
  }
  report["cases"] = cases;
  report["all_zero"] = all_ok;
  if (io.format == Format::Json) {
    io.out << report.dump(2) << "\n";
  } else if (io.format == Format::Csv) {
    io.out << "case,f,residual\n";
    for (const auto& row : csv) io.out << csv_field(row[0]) << "," << csv_field(row[1]) << "," << csv_field(row[2]) << "\n";
  } else {
    io.out << text.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct CompoundOptions {
  std::string rule = "CR4", expr, reference;
  unsigned dim = 2;
  int min_level = 1, max_level = 5;
};

inline int cmd_compound(const CompoundOptions& o, Output& io) {
  if (o.min_level < 0 || o.max_level < o.min_level || o.max_level > 10)
    throw UsageError("levels must satisfy 0 <= min <= max <= 10");
  const CubatureRule rule = resolve_rule(o.rule, o.dim, "");
  const std::string src = !o.expr.empty() ? o.expr : (rule.dimension() == 1 ? "exp(x)" : "exp(x+y)");
  const ExprPtr e = parse_expr(src);
  if (e->arity() > rule.dimension()) throw DimensionMismatch("expression uses more variables than the rule's region");
  const RealFunction f = to_function(e);
  double reference = 0.0;
  std::string reference_source;
  if (!o.reference.empty()) {
    const ExprPtr r = parse_expr(o.reference);
    if (r->arity() > 0) throw UsageError("--reference must be a constant expression");
    reference = evaluate(*r, {});
    reference_source = o.reference;
  } else {
    reference = adaptive_integral(rule.region(), f);
    reference_source = "adaptive";
  }
  const CompoundStudy study = compound_study(rule, f, reference, o.min_level, o.max_level);
  auto ratio_text = [](double r) { return std::isnan(r) ? std::string() : decimal(r, 6); };
  if (io.format == Format::Json) {
    Json rows = Json::array();
    for (const auto& r : study.rows)
      rows.push_back({{"level", r.estimate.level},
                      {"cells", r.estimate.cells},
                      {"estimate", r.estimate.estimate},
                      {"error", r.error},
                      {"ratio", std::isnan(r.ratio) ? Json(nullptr) : Json(r.ratio)}});
    Json j{{"rule", study.rule}, {"integrand", src}, {"reference", reference}, {"reference_source", reference_source},
           {"rows", rows}};
    j["order"] = study.order ? Json(*study.order) : Json(nullptr);
    if (!study.order_note.empty()) j["order_note"] = study.order_note;
    io.out << j.dump(2) << "\n";
  } else if (io.format == Format::Csv) {
    io.out << "level,cells,estimate,error,ratio\n";
    for (const auto& r : study.rows)
      io.out << r.estimate.level << "," << r.estimate.cells << "," << decimal(r.estimate.estimate, 17) << ","
             << decimal(r.error, 6) << "," << ratio_text(r.ratio) << "\n";
    io.out << "# order," << (study.order ? decimal(*study.order, 6) : "undefined: " + study.order_note) << "\n";
  } else {
    io.out << "compound " << study.rule << " on " << rule.region().describe() << ", f = " << src << "\n";
    io.out << "reference " << decimal(reference, 17) << " (" << reference_source << ")\n";
    io.out << std::left << std::setw(7) << "level" << std::setw(9) << "cells" << std::setw(24) << "estimate"
           << std::setw(14) << "error" << "ratio\n";
    for (const auto& r : study.rows)
      io.out << std::setw(7) << r.estimate.level << std::setw(9) << r.estimate.cells << std::setw(24)
             << decimal(r.estimate.estimate, 17) << std::setw(14) << decimal(r.error, 6) << ratio_text(r.ratio)
             << "\n";
    io.out << "fitted order: " << (study.order ? decimal(*study.order, 4) : "undefined (" + study.order_note + ")")
           << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

inline int cmd_catalog(unsigned dim, Output& io) {
  if (dim < 1 || dim > 8) throw UsageError("--dim must be in 1..8");
  std::vector<std::pair<CubatureRule, int>> rules;
  for (RuleName id : {RuleName::CR1, RuleName::CR2, RuleName::CR3, RuleName::CR4, RuleName::CR5,
                      RuleName::CR5Conjugate, RuleName::CR6, RuleName::TriangleMidedge}) {
    const unsigned n = id == RuleName::CR2 ? std::max(dim, 2U) : dim;
    rules.emplace_back(named_rule(id, n), claimed_degree(id));
  }
  if (io.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& [rule, deg] : rules) {
      Json j = to_json(rule);
      j["claimed_degree"] = deg;
      Json dec = Json::array();
      for (const auto& w : rule.weights()) dec.push_back(w.to_double());
      j["decimal_weights"] = dec;
      arr.push_back(j);
    }
    io.out << arr.dump(2) << "\n";
  } else if (io.format == Format::Csv) {
    io.out << "rule,region,node,point,weight,weight_decimal\n";
    for (const auto& [rule, deg] : rules)
      for (std::size_t i = 0; i < rule.size(); ++i)
        io.out << csv_field(rule.label()) << "," << csv_field(rule.region().describe()) << "," << i + 1 << ","
               << csv_field(CubatureRule::point_text(rule.nodes()[i])) << "," << csv_field(rule.weights()[i].to_string())
               << "," << decimal(rule.weights()[i]) << "\n";
  } else {
    for (const auto& [rule, deg] : rules) {
      io.out << rule.label() << " on " << rule.region().describe() << ", degree " << deg << ", " << rule.size()
             << " nodes\n";
      for (std::size_t i = 0; i < rule.size(); ++i)
        io.out << "    " << std::left << std::setw(48) << CubatureRule::point_text(rule.nodes()[i]) << std::setw(30)
               << rule.weights()[i].to_string() << decimal(rule.weights()[i]) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

/// Parses argv and runs one subcommand. Returns the process exit code:
/// 0 success, 1 domain error or unconfirmed claim, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact cubature rules: exactness certificates, moments, derivations and convergence studies",
               "simpson-nd"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name;
  if (const char* env = std::getenv("SIMPSON_ND_FORMAT")) format_name = env;
  if (format_name.empty()) format_name = "text";
  app.add_option("--format", format_name, "Output format: text, json or csv (default from SIMPSON_ND_FORMAT)");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Certify the exactness degree of a rule, or run the claim suite");
  verify->add_option("--rule", vo.rule, "Named rule: CR1..CR6, CR5-conjugate, TriangleMidedge");
  verify->add_option("--dim", vo.dim, "Dimension for CR1, CR2, CR3")->capture_default_str();
  verify->add_option("--max-degree", vo.max_degree, "Highest degree tested (default: claimed degree + 2)");
  verify->add_option("--rule-file", vo.rule_file, "Rule in JSON form");
  verify->add_flag("--all", vo.all, "Run every reproducible claim");

  MomentsOptions mo;
  auto* moments = app.add_subcommand("moments", "Exact monomial moments of a region");
  moments->add_option("--region", mo.region, "simplex:N, cube:N, disc, trapezoid-paper, hexagon-paper");
  moments->add_option("--region-file", mo.region_file, "Region in JSON form");
  moments->add_option("--degree", mo.degree, "Highest total degree")->capture_default_str();

  DeriveOptions dopt;
  auto* derive = app.add_subcommand("derive", "Solve for the blend parameter or for free weights");
  derive->add_option("--region", dopt.region, "Region alias");
  derive->add_option("--region-file", dopt.region_file, "Region in JSON form");
  derive->add_option("--targets", dopt.targets, "degK or a list of monomials, e.g. x^2,y^2")->capture_default_str();
  derive->add_option("--exclude", dopt.exclude, "Monomials to drop from the targets");
  derive->add_option("--mode", dopt.mode, "lambda or weights")->capture_default_str();
  derive->add_option("--nodes", dopt.nodes, "Nodes as x,y;x,y;... (boundary nodes in lambda mode)");

  FamilyOptions fo;
  auto* family = app.add_subcommand("family", "Check a parameterized node system by substitution");
  family->add_option("--system", fo.system, "triangle, square, trapezoid or simplex3")->capture_default_str();
  family->add_option("--param", fo.param, "Family parameter (c, d or lambda)");

  CompoundOptions co;
  auto* compound = app.add_subcommand("compound", "Compound a rule over subdivisions and fit the convergence order");
  compound->add_option("--rule", co.rule, "Named rule")->capture_default_str();
  compound->add_option("--dim", co.dim, "Dimension for CR1, CR2, CR3")->capture_default_str();
  compound->add_option("--expr", co.expr, "Integrand, e.g. exp(x+y)");
  compound->add_option("--reference", co.reference, "Exact integral as a constant expression, e.g. (exp(1)-1)^2");
  compound->add_option("--min-level", co.min_level, "First subdivision level")->capture_default_str();
  compound->add_option("--max-level", co.max_level, "Last subdivision level")->capture_default_str();

  unsigned catalog_dim = 2;
  auto* catalog = app.add_subcommand("catalog", "List every named rule with exact and decimal weights");
  catalog->add_option("--dim", catalog_dim, "Dimension for CR1, CR2, CR3")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Output io{out, parse_format(format_name)};
    if (*verify) {
      if (!vo.all && vo.rule.empty() && vo.rule_file.empty()) throw UsageError("verify needs --rule, --rule-file or --all");
      return cmd_verify(vo, io);
    }
    if (*moments) return cmd_moments(mo, io);
    if (*derive) return cmd_derive(dopt, io);
    if (*family) return cmd_family(fo, io);
    if (*compound) return cmd_compound(co, io);
    if (*catalog) return cmd_catalog(catalog_dim, io);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace simpson::cli
