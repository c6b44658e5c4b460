#include "fourprod/cli.hpp"

#include "fourprod/core.hpp"
#include "fourprod/crosscheck.hpp"
#include "fourprod/differences.hpp"
#include "fourprod/elimination.hpp"
#include "fourprod/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>

namespace fourprod::cli {

using nlohmann::json;

namespace {

json complex_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

json solution_json(const Solution& s) {
  return json{{"v", complex_json(s.quadruple.v)}, {"x", complex_json(s.quadruple.x)},
              {"y", complex_json(s.quadruple.y)}, {"z", complex_json(s.quadruple.z)},
              {"residual", s.residual},           {"method", method_name(s.method)},
              {"branch", s.branch}};
}

json instance_json(const Instance& inst) {
  return json{{"a", inst.a}, {"b", inst.b}, {"c", inst.c}, {"d", inst.d}};
}

void print_solution_text(std::ostream& out, const Solution& s) {
  auto fmt = [](Complex c) {
    std::ostringstream os;
    os << std::setprecision(15) << c.real();
    if (c.imag() != 0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    return os.str();
  };
  out << "  (" << fmt(s.quadruple.v) << ", " << fmt(s.quadruple.x) << ", "
      << fmt(s.quadruple.y) << ", " << fmt(s.quadruple.z) << ")  residual=" << s.residual
      << "  method=" << method_name(s.method) << "  branch=" << s.branch << "\n";
}

bool nearly_real(const Quadruple& q) {
  for (Complex c : q.entries())
    if (std::abs(c.imag()) > 1e-8 * (1 + std::abs(c.real()))) return false;
  return true;
}

struct ParsedScalar {
  Rational exact;
  double value;
};

ParsedScalar require_scalar(const std::string& text, const std::string& flag) {
  auto r = parse_rational(text);
  if (!r) throw CLI::ValidationError(flag, "not a number (decimal or p/q): " + text);
  return {*r, to_double(*r)};
}

int run_solve(const std::string& sa, const std::string& sb, const std::string& sc,
              const std::string& sd, const std::string& method, double tol, bool real_only,
              const std::string& format, std::ostream& out) {
  RatInstance rinst{require_scalar(sa, "--a").exact, require_scalar(sb, "--b").exact,
                    require_scalar(sc, "--c").exact, require_scalar(sd, "--d").exact};
  Instance inst = rinst.to_double();

  std::vector<Solution> solutions;
  bool direct_absent = false;
  if (method == "elimination" || method == "all") {
    auto s = elim::method1_candidates(rinst, tol);
    solutions.insert(solutions.end(), s.begin(), s.end());
  }
  if (method == "differences" || method == "all") {
    auto s = diffs::method2_candidates(rinst, tol);
    solutions.insert(solutions.end(), s.begin(), s.end());
  }
  if (method == "direct" || method == "all") {
    auto s = oracle::direct_real_solve(inst, tol);
    if (s && s->residual <= tol)
      solutions.push_back(*s);
    else
      direct_absent = true;
  }
  solutions = dedup_solutions(std::move(solutions));
  if (real_only) {
    std::erase_if(solutions, [](const Solution& s) { return !nearly_real(s.quadruple); });
  }

  if (format == "json") {
    json doc{{"instance", instance_json(inst)}, {"solutions", json::array()}};
    for (const auto& s : solutions) doc["solutions"].push_back(solution_json(s));
    if (direct_absent && (method == "direct" || method == "all"))
      doc["report"] = json{{"direct", "no real all-positive-branch solution"}};
    out << doc.dump(2) << "\n";
  } else {
    out << "instance (a,b,c,d) = (" << inst.a << ", " << inst.b << ", " << inst.c << ", "
        << inst.d << ")\n";
    if (solutions.empty())
      out << "no solutions within tol=" << tol << "\n";
    else
      out << solutions.size() << " solution(s):\n";
    for (const auto& s : solutions) print_solution_text(out, s);
    if (direct_absent && (method == "direct" || method == "all"))
      out << "direct: no real all-positive-branch solution\n";
  }
  return solutions.empty() ? 2 : 0;
}

int run_verify(const std::string& sv, const std::string& sx, const std::string& sy,
               const std::string& sz, const std::string& format, std::ostream& out) {
  RatQuadruple q{require_scalar(sv, "--v").exact, require_scalar(sx, "--x").exact,
                 require_scalar(sy, "--y").exact, require_scalar(sz, "--z").exact};
  RatInstance rinst = forward_map(q);
  Instance inst = rinst.to_double();
  double res = residual(q.to_complex(), inst);
  if (format == "json") {
    json doc{{"instance", instance_json(inst)},
             {"instance_exact",
              {{"a", to_string(rinst.a)},
               {"b", to_string(rinst.b)},
               {"c", to_string(rinst.c)},
               {"d", to_string(rinst.d)}}},
             {"residual", res}};
    out << doc.dump(2) << "\n";
  } else {
    out << "forward map: (" << to_string(rinst.a) << ", " << to_string(rinst.b) << ", "
        << to_string(rinst.c) << ", " << to_string(rinst.d) << ")\n"
        << "residual: " << res << "\n";
  }
  return 0;
}

json comparison_json(const elim::TableComparison& cmp) {
  json cells = json::array();
  for (const auto& c : cmp.cells)
    cells.push_back(json{{"monomial", c.monomial},
                         {"printed", to_string(c.printed)},
                         {"derived", to_string(c.derived)},
                         {"ok", c.ok}});
  return json{{"verdict", elim::verdict_name(cmp.verdict)},
              {"ratio", to_string(cmp.ratio)},
              {"mismatched_cells", cmp.mismatched_cells},
              {"cells", cells}};
}

int run_derive(const std::string& format, std::ostream& out) {
  bool factorization_ok = elim::verify_factorization_relations();
  const auto& rep = elim::derive_master_octic();
  bool ok = factorization_ok && rep.odd_powers_vanish &&
            rep.vs_printed_t.verdict != elim::Verdict::mismatch &&
            rep.vs_printed_u.verdict != elim::Verdict::mismatch;
  if (format == "json") {
    json doc{{"report",
              {{"factorization_identity", factorization_ok},
               {"odd_powers_vanish", rep.odd_powers_vanish},
               {"t_table", comparison_json(rep.vs_printed_t)},
               {"u_table", comparison_json(rep.vs_printed_u)},
               {"all_checks_passed", ok}}}};
    out << doc.dump(2) << "\n";
  } else {
    out << "two-biquadratic factorization identity: " << (factorization_ok ? "ok" : "FAIL")
        << "\n";
    out << "rationalized octic has only even powers of t: "
        << (rep.odd_powers_vanish ? "ok" : "FAIL") << "\n";
    auto show = [&](const char* name, const elim::TableComparison& cmp) {
      out << name << ": " << elim::verdict_name(cmp.verdict);
      if (cmp.verdict == elim::Verdict::proportional) out << " (ratio " << to_string(cmp.ratio) << ")";
      out << "\n";
      for (const auto& c : cmp.cells)
        out << "  " << (c.ok ? "ok      " : "MISMATCH") << "  " << c.monomial << ": printed "
            << to_string(c.printed) << ", derived " << to_string(c.derived) << "\n";
    };
    show("derived octic vs printed t-table", rep.vs_printed_t);
    show("derived octic vs printed u-table", rep.vs_printed_u);
    out << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return ok ? 0 : 2;
}

int run_selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };

  Instance inst{9, 16, 21, 24};
  double tol = 1e-9;
  Quadruple expected{1, 2, 3, 4};
  auto contains = [&](const std::vector<Solution>& sols) {
    for (const auto& s : sols)
      if (quad_distance(s.quadruple, expected) <= 1e-6) return true;
    return false;
  };
  check("elimination recovers (1,2,3,4)", contains(elim::method1_candidates(inst, tol)));
  check("differences recovers (1,2,3,4)", contains(diffs::method2_candidates(inst, tol)));
  auto direct = oracle::direct_real_solve(inst, tol);
  check("direct recovers (1,2,3,4)",
        direct && quad_distance(direct->quadruple, expected) <= 1e-6);

  auto qty = elim::quantities_at(inst, 5.0);
  check("intermediates p,q,r,s = 4,3,2,1",
        qty.p == 4 && qty.q == 3 && qty.r == 2 && qty.s == 1);
  check("alpha=10 beta=35 gamma=50 delta=24",
        qty.alpha == 10 && qty.beta == 35 && qty.gamma_minus == 50 && qty.delta_minus == 24);
  check("radicand 90000, S = 576 = delta^2", qty.radicand == 90000 && qty.S == 576);

  auto quartic = elim::method1_quartic(invariants(inst));
  check("method-I quartic coefficients",
        quartic.c8 == -912912 && quartic.c6 == 84182720 && quartic.c4 == 699099456 &&
            quartic.c2 == 1170854400 && quartic.c0 == 400000000);

  RatInstance rinst{9, 16, 21, 24};
  auto tq = diffs::tau_quartic(rinst, diffs::Pairing{});
  Rational at12 = 0, tau = 12;
  for (const auto& c : tq.exact) at12 = at12 * tau + c;
  check("method-II quartic vanishes at tau=12", at12 == 0);

  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recovers quadruples (v,x,y,z) from the four products of each "
               "unknown with the sum of the other three."};
  app.require_subcommand(1);

  std::string a, b, c, d, v, x, y, z;
  std::string method = "all", format = "text";
  double tol = 1e-9;
  bool real_only = false;

  auto* solve = app.add_subcommand("solve", "solve an instance (a,b,c,d)");
  solve->add_option("--a", a, "product for v")->required();
  solve->add_option("--b", b, "product for x")->required();
  solve->add_option("--c", c, "product for y")->required();
  solve->add_option("--d", d, "product for z")->required();
  solve->add_option("--method", method, "elimination|differences|direct|all")
      ->check(CLI::IsMember({"elimination", "differences", "direct", "all"}));
  solve->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);
  solve->add_flag("--real-only", real_only, "drop solutions with imaginary parts");
  solve->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "forward map and residual of a quadruple");
  verify->add_option("--v", v)->required();
  verify->add_option("--x", x)->required();
  verify->add_option("--y", y)->required();
  verify->add_option("--z", z)->required();
  verify->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

  auto* derive = app.add_subcommand(
      "derive", "symbolic re-derivation of the octic with table comparison");
  derive->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

  app.add_subcommand("selftest", "golden-instance check suite");

  std::vector<const char*> argv{"fourprod"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand("solve")) return run_solve(a, b, c, d, method, tol, real_only, format, out);
    if (app.got_subcommand("verify")) return run_verify(v, x, y, z, format, out);
    if (app.got_subcommand("derive")) return run_derive(format, out);
    return run_selftest(out);
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return 1;
  }
}

} // namespace fourprod::cli
