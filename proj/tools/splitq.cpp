// splitq: solve a x^2 + b x + c = 0 over the split quaternions.
//
// Exit codes: 0 ok, 1 input error, 2 empty or unsolvable, 3 companion
// polynomial identically zero, 4 a verification or corpus check failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "splitq/splitq.hpp"

using namespace splitq;

namespace {

enum Exit { ok = 0, input_error = 1, empty_set = 2, inapplicable = 3, check_failed = 4 };

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw error(errc::parse, "cannot open \"" + path + "\"");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Options {
  std::string file;
  bool as_json = false;
  std::string only;
  std::string grid = "-2:2:1/2";
  std::string y;
  std::string params;
};

std::vector<Scalar> parse_params(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) out.push_back(parse_scalar(item));
  if (out.size() != 2) throw error(errc::parse, "--params expects two values x2,x3");
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_solve(const Options& o) {
  auto doc = io::parse_equation_document(read_input(o.file));
  SolveReport rep = solve_detailed(doc.equation);
  std::optional<SolutionSet> eq1;
  if (!o.y.empty()) {
    if (!rep.normalized.eq.b.is_zero()) throw error(errc::parse, "--y applies only when the normalized b is zero");
    const auto& n = rep.normalized;
    if (!eq1_solvable(n.eq.a, n.eq.c)) throw error(errc::parse, "--y: equation has no roots (a c != 2 c)");
    eq1 = eq1_roots_for(n.eq.a, n.eq.c, parse_quaternion(o.y)).translated(n.shift);
  }
  std::optional<corpus::SemiExplicitSample> semi;
  if (!o.params.empty()) semi = corpus::evaluate_semi_explicit(rep.set, parse_params(o.params));

  if (o.as_json) {
    json j;
    j["equation"] = io::to_json(doc.equation);
    j["normalized"] = io::to_json(rep.normalized.eq);
    j["shift"] = to_string(rep.normalized.shift);
    j["cases"] = rep.cases;
    j["solutions"] = io::to_json(rep.set);
    if (eq1) j["sqrt_roots_for_y"] = io::to_json(*eq1);
    if (semi) {
      json pts = json::array();
      for (auto& p : semi->points) pts.push_back(io::to_json(p));
      j["semi_explicit_at_params"] = {{"T", semi->T}, {"points", pts}};
    }
    print(j);
  } else {
    std::cout << "normalized: (" << to_string(rep.normalized.eq.a) << ") x^2 + (" << to_string(rep.normalized.eq.b)
              << ") x + (" << to_string(rep.normalized.eq.c) << "), shift " << to_string(rep.normalized.shift) << "\n";
    std::cout << "cases:";
    for (auto& c : rep.cases) std::cout << " " << c;
    std::cout << "\n" << io::to_text(rep.set);
    if (eq1) std::cout << "roots for y = " << o.y << ":\n" << io::to_text(*eq1);
    if (semi) {
      std::cout << "semi-explicit family at (x2, x3) = (" << o.params << "):\n";
      for (auto& p : semi->points) std::cout << "  T = " << io::format_double(p[0]) << "  x = " << to_string(p) << "\n";
    }
  }
  return rep.set.empty() ? empty_set : ok;
}

int cmd_companion(const Options& o) {
  auto doc = io::parse_equation_document(read_input(o.file));
  const auto& e = doc.equation;
  CompanionResult cr = solve_via_companion(e);
  if (o.as_json) {
    json j;
    j["equation"] = io::to_json(e);
    j["inapplicable"] = cr.inapplicable;
    json coeffs = json::array();
    for (auto& c : cr.poly.coeffs()) coeffs.push_back(to_string(c));
    j["companion"] = {{"text", cr.poly.to_string()}, {"coefficients_low_to_high", coeffs}};
    json steps = json::array();
    for (auto& s : cr.steps) {
      json d;
      if (s.divisor.exact) {
        d["T"] = to_string(s.divisor.T);
        d["N"] = to_string(s.divisor.N);
        d["Ta+b"] = io::to_json(SplitQuaternion(e.a * s.divisor.T + e.b));
        d["Na-c"] = io::to_json(SplitQuaternion(e.a * s.divisor.N - e.c));
      } else {
        d["T"] = io::format_double(s.divisor.Tf);
        d["N"] = io::format_double(s.divisor.Nf);
        d["float"] = true;
      }
      d["linear_kind"] = to_string(s.linear_kind);
      if (s.linear) d["linear"] = io::to_json(*s.linear);
      d["intersection"] = io::to_json(s.part);
      steps.push_back(d);
    }
    j["divisors"] = steps;
    if (!cr.inapplicable) j["solutions"] = io::to_json(cr.set);
    print(j);
  } else if (cr.inapplicable) {
    std::cout << "companion polynomial identically zero; the companion path does not apply\n";
  } else {
    std::cout << "c(x) = " << cr.poly.to_string() << "\n";
    if (cr.steps.empty()) std::cout << "no quadratic divisors\n";
    for (auto& s : cr.steps) {
      if (s.divisor.exact) {
        std::cout << "(T, N) = (" << to_string(s.divisor.T) << ", " << to_string(s.divisor.N) << ")\n";
        std::cout << "  T a + b = " << to_string(SplitQuaternion(e.a * s.divisor.T + e.b)) << "  ["
                  << to_string(classify(SplitQuaternion(e.a * s.divisor.T + e.b))) << "]\n";
        std::cout << "  N a - c = " << to_string(SplitQuaternion(e.a * s.divisor.N - e.c)) << "\n";
      } else {
        std::cout << "(T, N) ~ (" << io::format_double(s.divisor.Tf) << ", " << io::format_double(s.divisor.Nf) << ")\n";
      }
      std::cout << "  linear solution set: " << to_string(s.linear_kind);
      if (s.linear && s.linear->kind != LinearKind::empty) {
        std::cout << ", base " << to_string(s.linear->base);
        if (s.linear->kind == LinearKind::affine)
          for (auto& d : s.linear->directions()) std::cout << ", direction " << to_string(d);
      }
      std::cout << "\n  intersection with the class:\n";
      std::istringstream lines(io::to_text(s.part));
      for (std::string line; std::getline(lines, line);) std::cout << "    " << line << "\n";
    }
    std::cout << "union:\n" << io::to_text(cr.set);
  }
  if (cr.inapplicable) return inapplicable;
  return cr.set.empty() ? empty_set : ok;
}

int cmd_verify(const Options& o) {
  auto doc = io::parse_equation_document(read_input(o.file));
  GridSpec grid = GridSpec::parse(o.grid);
  SolutionSet set = solve(doc.equation);
  CheckReport rep = check_solution_set(doc.equation, set, grid);
  if (o.as_json) {
    print({{"ok", rep.ok()},
           {"grid", o.grid},
           {"grid_points", rep.grid_points},
           {"grid_roots", rep.grid_hits},
           {"grid_members", rep.grid_members},
           {"points_checked", rep.points_checked},
           {"family_samples_checked", rep.samples_checked},
           {"failures", rep.failures}});
  } else {
    std::cout << "grid " << o.grid << ": " << rep.grid_points << " points, " << rep.grid_hits << " roots, "
              << rep.grid_members << " in the solution set\n";
    std::cout << "residuals: " << rep.points_checked << " points, " << rep.samples_checked << " family samples\n";
    for (auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
    std::cout << (rep.ok() ? "verified\n" : "verification FAILED\n");
  }
  return rep.ok() ? ok : check_failed;
}

int cmd_corpus(const Options& o) {
  if (!o.only.empty() && !corpus::find(o.only)) throw error(errc::parse, "unknown corpus id \"" + o.only + "\"");
  auto results = corpus::run_all(o.only);
  bool all = true;
  for (auto& r : results) all = all && r.passed;
  if (o.as_json) {
    json arr = json::array();
    for (auto& r : results) arr.push_back(corpus::to_json(r));
    print({{"passed", all}, {"entries", arr}});
  } else {
    for (auto& r : results) {
      std::printf("%-5s %-4s %8.4fs  %s\n", r.id.c_str(), r.passed ? "PASS" : "FAIL", r.seconds, r.title.c_str());
      for (auto& m : r.messages) std::printf("        %s\n", m.c_str());
    }
  }
  return all ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic equations over the split quaternions with a zero-divisor leading coefficient"};
  app.require_subcommand(1);
  Options o;

  auto* solve_cmd = app.add_subcommand("solve", "Complete solution set");
  auto* comp_cmd = app.add_subcommand("companion", "Solve through the companion polynomial");
  auto* verify_cmd = app.add_subcommand("verify", "Check the solution set against a grid and residuals");
  auto* corpus_cmd = app.add_subcommand("corpus", "Run the built-in worked examples");

  for (auto* c : {solve_cmd, comp_cmd, verify_cmd}) {
    c->add_option("file", o.file, "Equation document (JSON); stdin when omitted or '-'");
    c->add_flag("--json", o.as_json, "Machine-readable output");
  }
  solve_cmd->add_option("--y", o.y, "Equation I: also print the square roots for this y");
  solve_cmd->add_option("--params", o.params, "Evaluate the semi-explicit family at x2,x3");
  verify_cmd->add_option("--grid", o.grid, "Grid lo:hi:step")->capture_default_str();
  corpus_cmd->add_option("--only", o.only, "Run a single entry");
  corpus_cmd->add_flag("--json", o.as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : input_error;
  }

  try {
    if (*solve_cmd) return cmd_solve(o);
    if (*comp_cmd) return cmd_companion(o);
    if (*verify_cmd) return cmd_verify(o);
    return cmd_corpus(o);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
}
