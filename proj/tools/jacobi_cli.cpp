#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jacobi/elliptic_genus.hpp"
#include "jacobi/generators.hpp"
#include "jacobi/lifts.hpp"
#include "jacobi/reports.hpp"
#include "jacobi/suites.hpp"

using namespace jacobi;

namespace {

enum Exit { kOk = 0, kParse = 2, kIdentity = 3, kPrecision = 4 };

struct Global {
  std::int64_t qmax = 2;
  std::int64_t smax = 2;
  std::int64_t pmax = 2;
  bool json = false;
  std::string out;
};

JacobiForm parse_form(const std::string &text, std::int64_t qprec) {
  try {
    return generator(generator_from_name(text), qprec);
  } catch (const Error &) {
  }
  return evaluate(GeneratorPolynomial::parse(text), qprec);
}

std::vector<Integer> parse_integers(const std::string &text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) throw ParseError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(path + ": " + e.what());
  }
}

// χ from the Euler number where the relations fix it: d = 3 and d = 5.
CYInvariants from_euler(int d, const Integer &e) {
  if (d == 3) {
    if (!mpz_even_p(e.get_mpz_t())) throw DivisibilityError("e(M3) must be even");
    Integer h = e / 2;
    return CYInvariants(3, {0, -h, h, 0});
  }
  if (d == 5) {
    if (!mpz_divisible_ui_p(e.get_mpz_t(), 24)) throw DivisibilityError("e(M5) = " + e.get_str() + " is not divisible by 24");
    Integer c = e / 24;
    return CYInvariants(5, {0, -c, 11 * c, -11 * c, c, 0});
  }
  throw ValidationError("--euler determines chi only for d = 3 and d = 5");
}

struct InvArgs {
  int d = 0;
  std::string chi;
  std::string input;
  std::string euler;
  std::string xi6;

  void add(CLI::App *sub) {
    sub->add_option("--d", d, "dimension");
    sub->add_option("--chi", chi, "chi_0,...,chi_d");
    sub->add_option("--input", input, "JSON file with d and chi or hodge");
    sub->add_option("--euler", euler, "Euler number (d = 3, 5)");
    sub->add_option("--xi6", xi6, "coefficient of xi06 (d = 12)");
  }
  CYInvariants get() const {
    if (!input.empty()) return cy_from_json(read_json_file(input));
    if (d <= 0) throw ValidationError("--d is required");
    if (!chi.empty()) return CYInvariants(d, parse_integers(chi));
    if (!euler.empty()) return from_euler(d, parse_integers(euler).at(0));
    throw ValidationError("give --chi, --euler or --input");
  }
  std::optional<Integer> xi6_coefficient() const {
    if (xi6.empty()) return std::nullopt;
    return parse_integers(xi6).at(0);
  }
};

class Output {
public:
  explicit Output(const Global &g) : g_(g) {}
  void emit(const Json &j, const std::string &text) {
    std::string s = g_.json ? j.dump(2) + "\n" : text;
    if (g_.out.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream f(g_.out);
    if (!f) throw ParseError("cannot write " + g_.out);
    f << s;
  }

private:
  const Global &g_;
};

std::string report_text(const Report &r) {
  std::string s;
  for (const auto &f : r) s += (f.pass ? "pass  " : "FAIL  ") + f.check + (f.detail.empty() ? "" : "  [" + f.detail + "]") + "\n";
  return s;
}

int cmd_expand(const Global &g, const std::string &form) {
  JacobiForm f = parse_form(form, kQDen * g.qmax);
  Output(g).emit(to_json(f), series_text(f.series));
  return kOk;
}

int cmd_genus(const Global &g, const InvArgs &a) {
  CYInvariants inv = a.get();
  const std::int64_t qprec = kQDen * std::max<std::int64_t>(g.qmax, 2);
  Json j;
  j["invariants"] = to_json(inv);
  Json rel = Json::array();
  for (const auto &r : relation_check(inv))
    rel.push_back({{"relation", r.relation}, {"status", r.pass ? "pass" : "fail"}, {"residual", r.residual.get_str()}});
  j["relations"] = rel;
  JacobiForm phi = elliptic_genus(inv, qprec, a.xi6_coefficient());
  j["genus"] = to_json(phi);
  j["chi_y"] = to_json(chi_y_polynomial(phi));
  Report rep = divisibility_report(inv, qprec);
  j["divisibility"] = to_json(rep);
  const std::string text = series_text(phi.series) + report_text(rep);
  Output(g).emit(j, text);
  return all_pass(rep) ? kOk : kIdentity;
}

struct LiftArgs {
  std::string kind;
  std::string form;
  std::string form_file;
  std::string name = "Delta2";
  std::string characteristic = "0,0,0,0";
  int zscale = 1;
  std::int64_t bound = 0;
  InvArgs inv;
};

int cmd_lift(const Global &g, const LiftArgs &a) {
  Output out(g);
  auto form = [&](std::int64_t orders) {
    if (a.form.empty() && a.form_file.empty()) throw ValidationError("--form or --form-file is required");
    JacobiForm f = a.form_file.empty() ? parse_form(a.form, kQDen * (orders + 1))
                                       : jacobi_form_from_json(read_json_file(a.form_file));
    return a.zscale == 1 ? f : scale_z(f, a.zscale);
  };
  auto emit = [&](const SiegelSeries &s) {
    std::string text = series_text(s.series);
    for (const auto &[ly, e] : s.y_factors)
      text += "* (1 - y^" + exponent_string(ly, kYDen) + ")^" + std::to_string(e) + "\n";
    out.emit(to_json(s), text);
  };
  if (a.kind == "explift") {
    JacobiForm f = form(std::max<std::int64_t>(1, (g.qmax - 1) * g.smax));
    emit(exp_lift(f, g.qmax, g.smax));
  } else if (a.kind == "sqeg") {
    const std::int64_t need = std::max<std::int64_t>(1, (g.qmax - 1) * g.pmax + 1);
    JacobiForm f = a.form.empty() && a.form_file.empty() ? elliptic_genus(a.inv.get(), kQDen * need, a.inv.xi6_coefficient()) : form(need);
    Series3 s = sqeg(f, g.pmax, kQDen * g.qmax);
    out.emit(to_json(s), series_text(s));
  } else if (a.kind == "eform") {
    emit(e_form(a.inv.get(), g.qmax, g.smax, a.inv.xi6_coefficient()));
  } else if (a.kind == "arith") {
    const std::int64_t q = a.bound > 0 ? a.bound : g.qmax, s = a.bound > 0 ? a.bound : g.smax;
    if (a.name == "Delta2")
      emit(arithmetic_lift(ArithmeticLift::Delta2, q, s));
    else if (a.name == "Delta1")
      emit(arithmetic_lift(ArithmeticLift::Delta1, q, s));
    else if (a.name == "Delta1/2")
      emit(delta_half_theta(q, s));
    else
      throw ValidationError("unknown arithmetic lift '" + a.name + "' (Delta2, Delta1, Delta1/2)");
  } else if (a.kind == "theta") {
    auto c = parse_integers(a.characteristic);
    if (c.size() != 4) throw ParseError("--char needs a1,a2,b1,b2");
    emit(siegel_theta_constant(c[0].get_si(), c[1].get_si(), c[2].get_si(), c[3].get_si(), g.qmax, g.smax));
  } else if (a.kind == "humbert") {
    JacobiForm f = form(2);
    Json arr = Json::array();
    std::string text;
    for (const auto &h : humbert_divisor(f)) {
      arr.push_back({{"a", h.a}, {"b", h.b}, {"D", h.D}, {"multiplicity", h.multiplicity.get_str()}});
      text += "H_" + std::to_string(h.D) + "(" + std::to_string(h.b) + "): " + h.multiplicity.get_str() + "\n";
    }
    out.emit(arr, text);
  } else {
    throw ValidationError("unknown lift kind '" + a.kind + "'");
  }
  return kOk;
}

int cmd_verify(const Global &g, const std::string &suite) {
  Report r = run_suite(suite, g.qmax);
  Output(g).emit(to_json(r), report_text(r));
  return all_pass(r) ? kOk : kIdentity;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Weak Jacobi forms, elliptic genera and their Siegel lifts"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--qmax", g.qmax, "integral q-orders")->check(CLI::PositiveNumber);
  app.add_option("--smax", g.smax, "integral s-orders")->check(CLI::PositiveNumber);
  app.add_option("--pmax", g.pmax, "p-orders of the second-quantized genus")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--out", g.out, "write output to FILE");

  std::string form;
  auto *expand = app.add_subcommand("expand", "expand a generator or a polynomial in Phi1..Phi4");
  expand->add_option("form", form, "phi01, xi06, \"Phi1*Phi3-Phi2^2\", ...")->required();
  expand->fallthrough();

  InvArgs genus_args;
  auto *genus = app.add_subcommand("genus", "elliptic genus from chi_y data");
  genus_args.add(genus);
  genus->fallthrough();

  LiftArgs lift_args;
  auto *lift = app.add_subcommand("lift", "Siegel products and sums");
  lift->add_option("kind", lift_args.kind, "explift, sqeg, eform, arith, theta, humbert")->required();
  lift->add_option("--form", lift_args.form, "weight-0 form");
  lift->add_option("--form-file", lift_args.form_file, "weight-0 form as JSON");
  lift->add_option("--zscale", lift_args.zscale, "use phi(tau, k z)")->check(CLI::PositiveNumber);
  lift->add_option("--name", lift_args.name, "Delta2, Delta1 or Delta1/2");
  lift->add_option("--bound", lift_args.bound, "q and s orders for arith");
  lift->add_option("--char", lift_args.characteristic, "a1,a2,b1,b2");
  lift_args.inv.add(lift);
  lift->fallthrough();

  std::string suite;
  auto *verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("suite", suite, "ring, basis, hecke, congruences, lifts, all")->required();
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (expand->parsed()) return cmd_expand(g, form);
    if (genus->parsed()) return cmd_genus(g, genus_args);
    if (lift->parsed()) return cmd_lift(g, lift_args);
    return cmd_verify(g, suite);
  } catch (const PrecisionError &e) {
    std::cerr << "precision: " << e.what() << "\n";
    return kPrecision;
  } catch (const DivisibilityError &e) {
    std::cerr << "divisibility: " << e.what() << "\n";
    return kIdentity;
  } catch (const IdentityError &e) {
    std::cerr << "identity: " << e.what() << "\n";
    return kIdentity;
  } catch (const InexactDivisionError &e) {
    std::cerr << "division: " << e.what() << "\n";
    return kIdentity;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
}
