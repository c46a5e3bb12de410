#include "luroth/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "luroth/acceptance.hpp"
#include "luroth/errors.hpp"
#include "luroth/nodal_quartic.hpp"
#include "luroth/parse.hpp"
#include "luroth/poncelet.hpp"
#include "luroth/resultant.hpp"

namespace luroth::cli {

namespace {

using json = nlohmann::ordered_json;

// Collects inputs and outputs once and renders them either as aligned text
// lines or as a JSON document.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void input(const std::string& key, const std::string& text) {
    inputs_[key] = text;
    lines_.emplace_back("input " + key, text);
  }

  void put(const std::string& key, const std::string& text) { add(key, text, text); }
  void put(const std::string& key, bool flag) { add(key, flag ? "true" : "false", flag); }
  void put(const std::string& key, int value) { add(key, std::to_string(value), value); }
  void put(const std::string& key, const Rational& r) { add(key, r.to_string(), r.to_string()); }
  void put(const std::string& key, const ProjectivePoint& p) { add(key, p.to_string(), p.to_string()); }
  void put(const std::string& key, const BinaryForm& f) {
    add(key, to_string(f), json{{"text", to_string(f)}, {"form", to_json(f)}});
  }
  void put(const std::string& key, const TernaryForm& f) {
    add(key, to_string(f), json{{"text", to_string(f)}, {"form", to_json(f)}});
  }
  void put_json(const std::string& key, const std::string& text, json value) { add(key, text, std::move(value)); }

  void line(const std::string& text) { lines_.emplace_back("", text); }

  void render(std::ostream& out, bool as_json, const std::string& status, const std::string& message = {}) const {
    if (as_json) {
      json doc{{"command", command_}, {"inputs", inputs_}, {"outputs", outputs_}, {"status", status}};
      if (!message.empty()) doc["message"] = message;
      out << doc.dump(2) << "\n";
      return;
    }
    out << "command: " << command_ << "\n";
    for (const auto& [k, v] : lines_) out << (k.empty() ? "" : k + ": ") << v << "\n";
    out << "status: " << status << (message.empty() ? "" : " (" + message + ")") << "\n";
  }

 private:
  void add(const std::string& key, const std::string& text, json value) {
    outputs_[key] = std::move(value);
    lines_.emplace_back(key, text);
  }

  std::string command_;
  json inputs_ = json::object();
  json outputs_ = json::object();
  std::vector<std::pair<std::string, std::string>> lines_;  // empty key: free-form line
};

VarTriple parse_var_triple(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw InputError("--vars expects three comma-separated names");
  return {parts[0], parts[1], parts[2]};
}

std::vector<poncelet::ParamPoint> parse_vertices(const std::string& text) {
  std::vector<poncelet::ParamPoint> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("vertex '" + item + "' is not of the form a:b");
    poncelet::ParamPoint p{Rational::parse(item.substr(0, colon)), Rational::parse(item.substr(colon + 1))};
    if (p.first.is_zero() && p.second.is_zero()) throw InputError("vertex '" + item + "' is the zero vector");
    out.push_back(p);
  }
  if (out.size() < 2) throw InputError("--vertices needs at least two points");
  return out;
}

poncelet::ConicParam parse_conic(const std::string& text) {
  if (text == "standard") return poncelet::standard_conic();
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ';');) parts.push_back(item);
  if (parts.size() != 3) throw InputError("--conic expects 'standard' or three ';'-separated binary quadratics");
  return poncelet::make_conic(parse_binary(parts[0], poncelet::kParamVars, 2),
                              parse_binary(parts[1], poncelet::kParamVars, 2),
                              parse_binary(parts[2], poncelet::kParamVars, 2));
}

std::string matrix_text(const RationalMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

void put_node_report(Report& r, const nodal::NodeReport& n) {
  r.put("on_curve", n.on_curve);
  r.put("singular", n.singular);
  r.put("ordinary", n.ordinary);
  r.put("admissible", n.admissible);
}

void put_decomposition(Report& r, const nodal::NodeDecomposition& d) {
  r.put_json("T", matrix_text(d.T), matrix_json(d.T));
  const auto& v = d.normalized.vars();
  r.put("normalized_vars", v[0] + "," + v[1] + "," + v[2]);
  r.put("f2", d.f2);
  r.put("f3", d.f3);
  r.put("f4", d.f4);
}

// Node failures are reported with their flags before the error exit.
nodal::NodeReport checked_node(Report& r, const TernaryForm& f, const ProjectivePoint& node) {
  const nodal::NodeReport n = nodal::verify_node(f, node);
  put_node_report(r, n);
  if (!n.on_curve) throw PreconditionError("node is not on the curve");
  if (!n.singular) throw PreconditionError("node is not a singular point");
  if (!n.ordinary) throw PreconditionError("node is not an ordinary double point");
  if (!n.admissible) throw PreconditionError("f2 and f3 share a factor");
  return n;
}

void cmd_poncelet(Report& r, const std::string& conic_text, const std::string& g1, const std::string& g2,
                  const std::string& vertices) {
  r.input("conic", conic_text);
  r.input("gamma1", g1);
  r.input("gamma2", g2);
  if (!vertices.empty()) r.input("vertices", vertices);
  const auto conic = parse_conic(conic_text);
  const auto pencil =
      poncelet::make_pencil(parse_binary(g1, poncelet::kParamVars), parse_binary(g2, poncelet::kParamVars));
  const auto points = vertices.empty() ? std::vector<poncelet::ParamPoint>{} : parse_vertices(vertices);
  r.put("conic_equation", conic.implicit);
  r.put("n", pencil.n);
  r.put("base_point_free", poncelet::is_base_point_free(pencil));
  const TernaryForm curve = poncelet::poncelet_curve(conic, pencil);
  r.put("curve", curve);
  r.put("degree", curve.degree());
  if (points.empty()) return;
  json table = json::array();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const DualPoint l = poncelet::chord_dual(conic, points[i], points[j]);
      const bool on = curve.eval(l.coords()).is_zero();
      const std::string label = "chord " + std::to_string(i) + "-" + std::to_string(j);
      r.line(label + ": " + l.to_string() + " " + (on ? "on-curve" : "off-curve"));
      table.push_back({{"i", i}, {"j", j}, {"line", l.to_string()}, {"on_curve", on}});
    }
  r.put_json("incidences", std::to_string(table.size()) + " chords", table);
}

void cmd_analyze(Report& r, const std::string& f_text, const std::string& node_text, const std::string& vars) {
  r.input("f", f_text);
  r.input("node", node_text);
  const TernaryForm f = parse_ternary(f_text, parse_var_triple(vars), 4);
  const ProjectivePoint node = ProjectivePoint::parse(node_text);
  checked_node(r, f, node);
  const auto a = nodal::classify(f, node);
  put_decomposition(r, a.decomposition);
  r.put("phi", a.conic_data.phi);
  r.put("psi", a.conic_data.psi);
  r.put("conic", a.conic_original);
  r.put("conic_normalized", a.conic_data.conic);
  r.put("det3", a.conic_data.det3);
  r.put("disc_phi2_plus_psi", a.conic_data.disc_binary);
  r.put("residual", a.residual);
  r.put("verdict", nodal::to_string(a.verdict));
  if (a.conic_singular_point) r.put("conic_singular_point", *a.conic_singular_point);
}

void cmd_tangent(Report& r, const std::string& f_text, const std::string& node_text, const std::string& g_text,
                 const std::string& vars_text) {
  r.input("f", f_text);
  r.input("node", node_text);
  r.input("g", g_text);
  const VarTriple vars = parse_var_triple(vars_text);
  const TernaryForm f = parse_ternary(f_text, vars, 4);
  const TernaryForm g = parse_ternary(g_text, vars, 4);
  const ProjectivePoint node = ProjectivePoint::parse(node_text);
  checked_node(r, f, node);
  if (!g.eval(node.coords()).is_zero()) throw PreconditionError("g does not vanish at the node");
  const auto d = nodal::normalize_at_node(f, node);
  const auto a = nodal::associated_conic(d);
  const auto t = nodal::tangent_map(d, a, g);
  put_decomposition(r, d);
  r.put_json("xi", "(" + t.xi.first.to_string() + ", " + t.xi.second.to_string() + ")",
             json::array({t.xi.first.to_string(), t.xi.second.to_string()}));
  r.put("phi_dot", t.phi_dot);
  r.put("psi_dot", t.psi_dot);
  r.put("conic_velocity", t.conic_velocity_original);
  r.put("conic_velocity_normalized", t.conic_velocity);
}

void cmd_family(Report& r, const std::string& name, const std::string& param_text) {
  r.input("name", name);
  r.input("param", param_text);
  const PolyMatrix m = poncelet::family_matrix(name, Rational::parse(param_text));
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    std::string text = "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(to_string(m.at(i, j)));
      text += (j ? ", " : "") + to_string(m.at(i, j));
    }
    rows.push_back(row);
    r.line("row " + std::to_string(i) + ": " + text + "]");
  }
  r.put_json("matrix", std::to_string(m.rows()) + "x" + std::to_string(m.cols()), rows);
  r.put("determinant", determinant(m));
}

// Corrupts a single entry of every family matrix; used to show that
// verification detects a broken input.
PolyMatrix faulty_family(std::string_view name, const Rational& param) {
  PolyMatrix m = poncelet::family_matrix(name, param);
  m.set(0, 2, m.at(0, 2) + TernaryForm::variable(0, poncelet::kDualVars));
  return m;
}

int cmd_verify(Report& r, bool inject_fault) {
  const auto results = acceptance::run_all(inject_fault ? acceptance::FamilyProvider(faulty_family)
                                                        : acceptance::FamilyProvider{});
  json checks = json::array();
  int failed = 0;
  for (const auto& c : results) {
    if (!c.passed) ++failed;
    r.line(std::string(c.passed ? "PASS" : "FAIL") + " " + std::to_string(c.id) + " " + c.name + ": " + c.detail);
    checks.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  r.put_json("checks", std::to_string(results.size() - static_cast<std::size_t>(failed)) + "/" +
                           std::to_string(results.size()) + " passed",
             checks);
  return failed == 0 ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Poncelet curves and nodal Lüroth quartics", "luroth"};
  app.require_subcommand(1);
  bool as_json = false;

  auto* pon = app.add_subcommand("poncelet", "jumping-line curve of a pencil on a conic");
  std::string conic = "standard", gamma1, gamma2, vertices;
  pon->add_option("--conic", conic, "'standard' or p0;p1;p2 in s0, s1");
  pon->add_option("--gamma1", gamma1, "first pencil generator in s0, s1")->required();
  pon->add_option("--gamma2", gamma2, "second pencil generator in s0, s1")->required();
  pon->add_option("--vertices", vertices, "parameter points a0:b0,a1:b1,...");
  pon->add_flag("--json", as_json);

  auto* quartic = app.add_subcommand("quartic", "nodal quartic analysis");
  quartic->require_subcommand(1);
  std::string f_text, node_text, g_text, vars = "u,v,w";
  auto* analyze = quartic->add_subcommand("analyze", "associated conic and type verdict at a node");
  analyze->add_option("--f", f_text, "quartic")->required();
  analyze->add_option("--node", node_text, "node a:b:c")->required();
  analyze->add_option("--vars", vars, "variable names, comma separated")->capture_default_str();
  analyze->add_flag("--json", as_json);
  auto* tangent = quartic->add_subcommand("tangent", "first-order variation of the associated conic");
  tangent->add_option("--f", f_text, "quartic")->required();
  tangent->add_option("--node", node_text, "node a:b:c")->required();
  tangent->add_option("--g", g_text, "perturbation quartic vanishing at the node")->required();
  tangent->add_option("--vars", vars, "variable names, comma separated")->capture_default_str();
  tangent->add_flag("--json", as_json);

  auto* family = app.add_subcommand("family", "worked 6x6 matrices and their determinants");
  std::string name, param = "0";
  family->add_option("--name", name, "eps91, 92 or 93")->required();
  family->add_option("--param", param, "epsilon for eps91, c for 93")->capture_default_str();
  family->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  bool inject_fault = false;
  verify->add_flag("--json", as_json);
  verify->add_flag("--inject-fault", inject_fault)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  std::string command;
  if (pon->parsed()) command = "poncelet";
  else if (analyze->parsed()) command = "quartic analyze";
  else if (tangent->parsed()) command = "quartic tangent";
  else if (family->parsed()) command = "family";
  else command = "verify";

  Report report(command);
  int code = kOk;
  std::string message;
  try {
    if (command == "poncelet") cmd_poncelet(report, conic, gamma1, gamma2, vertices);
    else if (command == "quartic analyze") cmd_analyze(report, f_text, node_text, vars);
    else if (command == "quartic tangent") cmd_tangent(report, f_text, node_text, g_text, vars);
    else if (command == "family") cmd_family(report, name, param);
    else code = cmd_verify(report, inject_fault);
  } catch (const InputError& e) {
    code = kInputError;
    message = e.what();
  } catch (const PreconditionError& e) {
    code = kPreconditionFailure;
    message = e.what();
  }

  const std::string status = code == kOk ? "ok" : code == kVerificationFailure ? "failed" : "error";
  report.render(out, as_json, status, message);
  if (!message.empty() && !as_json) err << "error: " << message << "\n";
  return code;
}

}  // namespace luroth::cli
