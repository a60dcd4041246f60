#pragma once

/// JSON encoding of quaternions, equations, families and solution sets.
/// Rationals are strings; float values carry "float": true.
///
/// Family components use a prefix grammar over the parameter names (and the
/// root variable of a semi-explicit family). A square-root branch reads
///   (+ base (* r sigma (sqrt D)))
/// with sigma ranging over {+1, -1}.

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitq/linear.hpp"
#include "splitq/normalize.hpp"
#include "splitq/solution_set.hpp"

namespace splitq {

using json = nlohmann::json;

namespace io {

inline const std::vector<std::string>& coordinate_names() {
  static const std::vector<std::string> names{"x0", "x1", "x2", "x3"};
  return names;
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline json to_json(const SplitQuaternion& x) {
  json j;
  for (int k = 0; k < 4; ++k) j[coordinate_names()[k]] = to_string(x[k]);
  return j;
}

inline json to_json(const SplitQuaternionF& x) {
  json j;
  for (int k = 0; k < 4; ++k) j[coordinate_names()[k]] = format_double(x[k]);
  j["float"] = true;
  return j;
}

inline Scalar scalar_from_json(const json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw error(errc::parse, "rational values must be strings or integers, got " + v.dump());
}

/// {"x0":..,"x1":..,"x2":..,"x3":..} or a text form such as "1 + j".
inline SplitQuaternion quaternion_from_json(const json& v) {
  if (v.is_string()) return parse_quaternion(v.get<std::string>());
  if (!v.is_object()) throw error(errc::parse, "quaternion must be an object or a string, got " + v.dump());
  if (v.contains("float") && v["float"].is_boolean() && v["float"].get<bool>())
    throw error(errc::parse, "expected an exact quaternion, got a float one");
  SplitQuaternion x;
  for (int k = 0; k < 4; ++k) {
    const auto& name = coordinate_names()[k];
    if (!v.contains(name)) throw error(errc::parse, "quaternion is missing \"" + name + "\"");
    x[k] = scalar_from_json(v[name]);
  }
  return x;
}

inline SplitQuaternionF float_quaternion_from_json(const json& v) {
  SplitQuaternionF x;
  for (int k = 0; k < 4; ++k) {
    const auto& f = v.at(coordinate_names()[k]);
    x[k] = f.is_string() ? std::stod(f.get<std::string>()) : f.get<double>();
  }
  return x;
}

inline json to_json(const QuadEquation& e) { return {{"a", to_json(e.a)}, {"b", to_json(e.b)}, {"c", to_json(e.c)}}; }

/// An equation document. With "unnormalized" present, {d, e, f} is the
/// equation to solve and a, b, c are optional.
struct EquationDocument {
  QuadEquation equation;
  std::optional<QuadEquation> stated_normal_form;
};

inline EquationDocument parse_equation_document(const json& doc) {
  if (!doc.is_object()) throw error(errc::parse, "equation document must be a JSON object");
  auto triple = [](const json& o, const char* a, const char* b, const char* c) {
    for (const char* key : {a, b, c})
      if (!o.contains(key)) throw error(errc::parse, std::string("equation is missing \"") + key + "\"");
    return QuadEquation{quaternion_from_json(o[a]), quaternion_from_json(o[b]), quaternion_from_json(o[c])};
  };
  EquationDocument out;
  if (doc.contains("unnormalized")) {
    out.equation = triple(doc["unnormalized"], "d", "e", "f");
    if (doc.contains("a")) out.stated_normal_form = triple(doc, "a", "b", "c");
  } else {
    out.equation = triple(doc, "a", "b", "c");
  }
  return out;
}

inline EquationDocument parse_equation_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::parse, std::string("invalid JSON: ") + e.what());
  }
  return parse_equation_document(doc);
}

inline std::string affine_prefix(const AffineForm& f) { return f.as_poly().to_prefix(coordinate_names()); }

inline AffineForm affine_from_prefix(const std::string& text) {
  PrefixParser parser(coordinate_names());
  Poly p = parser.parse(text);
  if (p.total_degree() > 1 || p.has_negative_exponent()) throw error(errc::parse, "parameter form must be affine: " + text);
  AffineForm f;
  f.constant = p.constant_term();
  for (int k = 0; k < 4; ++k) f.coef[k] = p.coefficient(k, 1).constant_term();
  return f;
}

/// Drops trailing variables the polynomial must not depend on.
inline Poly restrict_vars(const Poly& p, std::size_t n) {
  Poly out(n);
  for (auto& [e, c] : p.terms()) {
    for (std::size_t i = n; i < e.size(); ++i)
      if (e[i] != 0) throw error(errc::parse, "expression depends on an unexpected variable");
    out += Poly::monomial(c, std::vector<int>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n)));
  }
  return out;
}

inline json to_json(const Family& f) {
  auto names = f.variable_names();
  json j;
  j["shape"] = to_string(f.shape());
  j["params"] = f.params;
  json forms = json::array();
  for (auto& pf : f.param_forms) forms.push_back(affine_prefix(pf));
  j["param_forms"] = forms;
  json comps = json::array();
  std::string root = "(sqrt " + f.radicand.to_prefix(names) + ")";
  for (int k = 0; k < 4; ++k) {
    std::string base = f.components[k].to_prefix(names);
    if (is_zero(f.root_coef[k])) {
      comps.push_back(base);
      continue;
    }
    std::string branch = "(* " + to_string(f.root_coef[k]) + " sigma " + root + ")";
    comps.push_back(f.components[k].is_zero() ? branch : "(+ " + base + " " + branch + ")");
  }
  j["components"] = comps;
  json cons = json::array();
  for (auto& c : f.constraints) cons.push_back({{"expr", c.expr.to_prefix(names)}, {"rel", to_string(c.rel)}});
  j["constraints"] = cons;
  if (f.root)
    j["root_of"] = {{"var", f.root->name}, {"poly", f.root->poly.to_prefix(names)}, {"form", affine_prefix(f.root->form)}};
  j["origin"] = f.origin;
  return j;
}

inline Relation relation_from_string(const std::string& s) {
  if (s == "==") return Relation::eq;
  if (s == "!=") return Relation::ne;
  if (s == ">=") return Relation::ge;
  throw error(errc::parse, "unknown relation \"" + s + "\"");
}

inline Family family_from_json(const json& j) {
  Family f;
  f.params = j.at("params").get<std::vector<std::string>>();
  for (auto& s : j.at("param_forms")) f.param_forms.push_back(affine_from_prefix(s.get<std::string>()));
  if (f.param_forms.size() != f.params.size()) throw error(errc::parse, "param_forms and params differ in length");
  if (j.contains("root_of")) {
    const auto& r = j["root_of"];
    RootSpec spec;
    spec.name = r.at("var").get<std::string>();
    spec.form = affine_from_prefix(r.at("form").get<std::string>());
    f.root = spec;
  }
  auto names = f.variable_names();
  const std::size_t n = names.size();
  // Hidden variables: sigma, then the square root.
  auto ext = names;
  ext.push_back("sigma");
  ext.push_back("__root");
  std::optional<Poly> radicand;
  PrefixParser parser(ext, [&](const Poly& d) {
    Poly dn = restrict_vars(d, n);
    if (radicand && !(*radicand == dn)) throw error(errc::parse, "components use different radicands");
    radicand = dn;
    return Poly::var(n + 1, n + 2);
  });
  auto plain = [&](const std::string& text) { return restrict_vars(parser.parse(text), n); };

  const auto& comps = j.at("components");
  if (comps.size() != 4) throw error(errc::parse, "a family needs four components");
  for (int k = 0; k < 4; ++k) {
    Poly p = parser.parse(comps[k].get<std::string>());
    Poly branch = p.coefficient(n, 1);
    f.components[k] = restrict_vars(p.coefficient(n, 0), n);
    if (!branch.is_zero()) {
      Poly rc = branch.coefficient(n + 1, 1);
      if (!rc.is_constant() || !(branch == rc * Poly::var(n + 1, n + 2)))
        throw error(errc::parse, "sigma must multiply a constant times the square root");
      f.root_coef[k] = rc.constant_term();
    }
  }
  f.radicand = radicand ? *radicand : Poly(n);
  for (auto& c : j.at("constraints"))
    f.constraints.push_back({plain(c.at("expr").get<std::string>()), relation_from_string(c.at("rel").get<std::string>())});
  if (f.root) f.root->poly = plain(j["root_of"].at("poly").get<std::string>());
  f.origin = j.value("origin", "");
  return f;
}

inline json to_json(const SolutionSet& s) {
  json pts = json::array();
  for (auto& p : s.points) pts.push_back(to_json(p));
  for (auto& p : s.float_points) pts.push_back(to_json(p));
  json fams = json::array();
  for (auto& f : s.families) fams.push_back(to_json(f));
  json j{{"points", pts}, {"families", fams}, {"empty", s.empty()}};
  if (!s.notes.empty()) j["notes"] = s.notes;
  return j;
}

inline SolutionSet solution_set_from_json(const json& j) {
  SolutionSet s;
  for (auto& p : j.at("points")) {
    if (p.value("float", false))
      s.float_points.push_back(float_quaternion_from_json(p));
    else
      s.points.push_back(quaternion_from_json(p));
  }
  for (auto& f : j.at("families")) s.families.push_back(family_from_json(f));
  if (j.contains("notes")) s.notes = j["notes"].get<std::vector<std::string>>();
  return s;
}

inline json to_json(const LinearSolutionSet& L) {
  json j{{"kind", to_string(L.kind)}};
  if (L.kind == LinearKind::empty) return j;
  j["base"] = to_json(L.base);
  json dirs = json::array();
  if (L.kind == LinearKind::affine)
    for (auto& d : L.directions()) dirs.push_back(to_json(d));
  j["directions"] = dirs;
  return j;
}

/// Human-readable rendering.
inline std::string to_text(const Family& f) {
  auto names = f.variable_names();
  std::string out = to_string(f.shape()) + std::string(" family in (");
  for (std::size_t i = 0; i < f.params.size(); ++i) out += (i ? ", " : "") + f.params[i];
  out += ")  [" + f.origin + "]\n";
  std::string root = "sqrt(" + f.radicand.to_prefix(names) + ")";
  for (int k = 0; k < 4; ++k) {
    out += "    x" + std::to_string(k) + " = " + f.components[k].to_prefix(names);
    if (!is_zero(f.root_coef[k])) out += "  +- " + to_string(f.root_coef[k]) + " * " + root;
    out += "\n";
  }
  if (f.root) out += "    where " + f.root->name + " is a real root of " + f.root->poly.to_prefix(names) + " = 0\n";
  for (auto& c : f.constraints) out += "    subject to " + c.expr.to_prefix(names) + " " + to_string(c.rel) + " 0\n";
  return out;
}

inline std::string to_text(const SolutionSet& s) {
  if (s.empty()) {
    std::string out = "no solutions\n";
    for (auto& n : s.notes) out += "note: " + n + "\n";
    return out;
  }
  std::string out;
  for (auto& p : s.points) out += "point " + to_string(p) + "\n";
  for (auto& p : s.float_points) out += "point ~ " + to_string(p) + "\n";
  for (auto& f : s.families) out += to_text(f);
  for (auto& n : s.notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace io

}  // namespace splitq
