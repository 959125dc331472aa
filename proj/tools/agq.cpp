// command-line driver: every verifier behind one binary, JSON reports,
// exit 0 = pass, 1 = verification fail, 2 = usage error
#include "agq/bailey.hpp"
#include "agq/character.hpp"
#include "agq/halfderiv.hpp"
#include "agq/identities.hpp"
#include "agq/lvalues.hpp"
#include "agq/suite.hpp"
#include "agq/unity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using agq::APComplex;
using agq::BigFloat;
using agq::Report;
using json = nlohmann::ordered_json;

constexpr const char* kSchema = "agq-report/1";

json complex_json(const APComplex& z) {
  return json{{"re-hex", agq::bigfloat_to_hex(z.re)},
              {"im-hex", agq::bigfloat_to_hex(z.im)},
              {"re-dec", agq::bigfloat_to_dec(z.re)},
              {"im-dec", agq::bigfloat_to_dec(z.im)}};
}

json report_json(const Report& rep, const std::string& command) {
  json out;
  out["schema"] = kSchema;
  out["command"] = command;
  out["name"] = rep.name;
  out["status"] = rep.status();
  json params = json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  out["parameters"] = params;
  json details = json::array();
  for (const auto& d : rep.details) {
    json e{{"check", d.name}, {"ok", d.ok}};
    if (!d.location.empty()) e["location"] = d.location;
    if (!d.ok) {
      e["expected"] = d.expected;
      e["actual"] = d.actual;
    }
    details.push_back(e);
  }
  out["details"] = details;
  if (rep.seed) out["seed"] = *rep.seed;
  if (rep.precision_bits) out["precision-bits"] = *rep.precision_bits;
  out["timing-ms"] = rep.timing_ms;
  return out;
}

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_file);
  if (!out) throw std::runtime_error("cannot open " + out_file);
  out << text << "\n";
}

void print_report_text(const Report& rep, std::ostream& os) {
  os << rep.name << ": " << rep.status() << "\n";
  for (const auto& [k, v] : rep.params) os << "  " << k << " = " << v << "\n";
  for (const auto& d : rep.details) {
    os << "  [" << (d.ok ? "ok" : "FAIL") << "] " << d.name;
    if (!d.location.empty()) os << " @ " << d.location;
    if (!d.ok) os << "\n        expected " << d.expected << ", got " << d.actual;
    os << "\n";
  }
}

int tail_count(const std::string& tail) {
  if (tail == "optimal") return -1;
  try {
    size_t used = 0;
    int v = std::stoi(tail, &used);
    if (used == tail.size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("--tail expects a positive integer or 'optimal'");
}

struct Options {
  int m = 1, a = 0, order = 12, N = 10, precision = 256;
  int samples = 100;
  long seed = 20240911;
  std::string tail = "optimal";
  std::string t0 = "1/100";
  std::string tau = "i";
  std::string out_file;
  bool json_out = false;
};

APComplex parse_tau(const std::string& text) {
  // "re,im" with decimal parts; shorthands "i" and "2i"
  std::string re = "0", im;
  auto comma = text.find(',');
  if (comma != std::string::npos) {
    re = text.substr(0, comma);
    im = text.substr(comma + 1);
  } else if (!text.empty() && text.back() == 'i') {
    im = text.substr(0, text.size() - 1);
    if (im.empty()) im = "1";
  } else {
    throw CLI::ValidationError("--tau expects 're,im' or 'i'/'2i'");
  }
  try {
    return APComplex(BigFloat(re), BigFloat(im));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--tau: cannot parse '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification driver for the half-derivative q-series suite"};
  app.require_subcommand(1);
  Options opt;

  std::function<Report()> runner;
  std::string command;
  bool value_mode = false;  // kashaev: print a value, not a pass/fail report

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json_out, "emit one JSON report on stdout");
    cmd->add_option("--out", opt.out_file, "write the report to FILE");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a single verifier");
  verify->require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
    std::function<Report()> fn;
    bool has_m, has_a, has_order, has_n, has_prec, has_tail;
  };
  // --order is the t-order, q-order or window of the check; --N the root
  // of unity; --tail the truncation of divergent tails
  const std::vector<Spec> specs = {
      {"theorem", "t-expansion of the nested sum vs the L-value series",
       [&] {
         agq::XSeriesResult res = agq::verify_theorem(opt.m, opt.a, opt.order);
         Report rep;
         rep.name = "theorem";
         rep.param("m", opt.m);
         rep.param("a", opt.a);
         rep.param("order", opt.order);
         rep.param("equal-through", res.equal_through);
         if (res.passed())
           rep.ok("multi-sum route equals L-value route");
         else
           rep.fail("multi-sum route equals L-value route",
                    "t^" + std::to_string(res.equal_through + 1),
                    agq::rational_to_string(res.rhs[res.equal_through + 1]),
                    agq::rational_to_string(res.lhs[res.equal_through + 1]));
         return rep;
       },
       true, true, true, false, false, false},
      {"t-values", "Bernoulli route vs generating-function route",
       [&] {
         Report rep;
         rep.name = "t-values";
         rep.param("m", opt.m);
         rep.param("a", opt.a);
         rep.param("n-max", opt.order);
         for (int n = 0; n <= opt.order; ++n) {
           agq::Rational lhs = agq::t_value_bernoulli(opt.m, opt.a, n);
           agq::Rational rhs = agq::t_value_genfun(opt.m, opt.a, n);
           if (lhs != rhs) {
             rep.fail("routes agree", "n=" + std::to_string(n),
                      agq::rational_to_string(rhs),
                      agq::rational_to_string(lhs));
             return rep;
           }
           rep.param("T(" + std::to_string(n) + ")",
                     agq::rational_to_string(lhs));
         }
         rep.ok("routes agree");
         return rep;
       },
       true, true, true, false, false, false},
      {"q-binomial", "both recurrences as exact polynomial identities",
       [&] { return agq::verify_qbinomial_recurrences(opt.order); },
       false, false, true, false, false, false},
      {"sum-product", "multi-sum vs modular product and character sum",
       [&] { return agq::verify_andrews_gordon(opt.m, opt.a, opt.order); },
       true, true, true, false, false, false},
      {"variant", "slack-bracket multi-sum vs product",
       [&] { return agq::verify_variant_ag(opt.m, opt.a, opt.order); },
       true, true, true, false, false, false},
      {"triple-product", "theta sum vs triple product (x-range = order/2)",
       [&] { return agq::verify_jacobi_triple(opt.order, opt.order / 2); },
       false, false, true, false, false, false},
      {"h-closed", "two-variable multisum vs character closed form",
       [&] { return agq::verify_H_closed_form(opt.m, opt.a, opt.order, opt.order); },
       true, true, true, false, false, false},
      {"h-difference", "closed form satisfies the x -> qx difference equation",
       [&] {
         return agq::verify_H_difference_equation(opt.m, opt.a, opt.order,
                                                  opt.order);
       },
       true, true, true, false, false, false},
      {"htilde", "companion function and its difference equation",
       [&] { return agq::verify_Htilde_difference(opt.m, opt.a, opt.order, opt.order); },
       true, true, true, false, false, false},
      {"h-unity", "closed form at x = 1 vs triple product",
       [&] { return agq::verify_H_unity(opt.m, opt.a, opt.order); },
       true, true, true, false, false, false},
      {"decomposition", "two-block split of the two-variable function",
       [&] {
         return agq::verify_H_finite_decomposition(opt.m, opt.a, opt.order,
                                                   opt.order);
       },
       true, true, true, false, false, false},
      {"bridge", "x-derivative at 1: sums and products vs character series",
       [&] { return agq::verify_bridge_identity(opt.m, opt.a, opt.order); },
       true, true, true, false, false, false},
      {"bc-lemma", "alternating double-index sum collapses to a bracket",
       [&] { return agq::verify_bc_lemma(opt.a, opt.order); },
       false, true, true, false, false, false},
      {"bailey", "pair transport, iteration and bilateral forms",
       [&] { return agq::verify_bailey_machinery(opt.order, opt.samples, opt.seed); },
       false, false, true, false, false, false},
      {"omega", "root-of-unity ladder identities",
       [&] { return agq::verify_omega_identities(opt.N, opt.precision); },
       false, false, false, true, true, false},
      {"asymptotic", "large-N expansion of the nested sum at omega_N",
       [&] {
         Report rep;
         rep.name = "asymptotic";
         rep.param("m", opt.m);
         rep.param("a", opt.a);
         rep.param("N", opt.N);
         rep.param("tail", opt.tail);
         rep.precision_bits = opt.precision;
         int terms = tail_count(opt.tail);
         APComplex lhs = agq::eval_x_unity(opt.m, opt.a, opt.N, opt.precision);
         APComplex rhs =
             agq::asymptotic_rhs(opt.m, opt.a, opt.N, opt.precision, terms);
         if (terms < 0)
           terms = agq::optimal_tail_terms(opt.m, opt.a, opt.N, opt.precision);
         BigFloat omitted = agq::tail_term_magnitude(opt.m, opt.a, opt.N,
                                                     terms, opt.precision);
         BigFloat residual = (lhs - rhs).abs();
         rep.param("terms", terms);
         rep.param("value", agq::bigfloat_to_dec(lhs.re) + " + " +
                                agq::bigfloat_to_dec(lhs.im) + "i");
         rep.param("residual", agq::bigfloat_to_dec(residual));
         rep.param("omitted-term", agq::bigfloat_to_dec(omitted));
         if (residual <= 2 * omitted)
           rep.ok("residual within twice the first omitted term");
         else
           rep.fail("residual within twice the first omitted term", "",
                    "<= " + agq::bigfloat_to_dec(2 * omitted),
                    agq::bigfloat_to_dec(residual));
         return rep;
       },
       true, true, false, true, true, true},
      {"matrix", "reflection matrix symmetry and involution",
       [&] { return agq::verify_modular_matrix(opt.m, opt.precision); },
       true, false, false, false, true, false},
      {"poisson", "theta vector transform under tau -> -1/tau",
       [&] {
         return agq::verify_poisson_modularity(opt.m, parse_tau(opt.tau),
                                               opt.precision);
       },
       true, false, false, false, true, false},
      {"nearly-modular", "reformulated expansion, componentwise",
       [&] {
         return agq::verify_nearly_modular(opt.m, opt.N, opt.precision,
                                           tail_count(opt.tail));
       },
       true, false, false, true, true, true},
      {"mellin", "theta sum vs L-value asymptotic series at t0",
       [&] {
         agq::PeriodicCharacter chi = agq::chi_general(opt.m, opt.a);
         agq::Rational t0 = agq::rational_from_string(opt.t0);
         int terms = tail_count(opt.tail);
         if (terms < 0) terms = agq::mellin_optimal_terms(chi, t0, opt.precision);
         agq::MellinCheck c =
             agq::mellin_asymptotic_check(chi, t0, terms, opt.precision);
         Report rep;
         rep.name = "mellin";
         rep.param("m", opt.m);
         rep.param("a", opt.a);
         rep.param("t0", opt.t0);
         rep.param("terms", c.terms);
         rep.param("lhs", c.lhs);
         rep.param("rhs", c.rhs);
         rep.param("residual", c.residual);
         rep.param("omitted-term", c.omitted_term);
         rep.precision_bits = opt.precision;
         if (c.within_bound)
           rep.ok("residual within twice the first omitted term");
         else
           rep.fail("residual within twice the first omitted term", "",
                    "<= 2 * " + c.omitted_term, c.residual);
         return rep;
       },
       true, true, false, false, true, true},
      {"half-derivative", "theta-type sum vs truncated t-expansion at t0",
       [&] {
         int terms = tail_count(opt.tail);
         if (terms < 0) terms = 12;
         return agq::half_derivative_numeric_check(
             opt.m, opt.a, agq::rational_from_string(opt.t0), terms,
             opt.precision);
       },
       true, true, false, false, true, true},
  };

  for (const Spec& s : specs) {
    CLI::App* cmd = verify->add_subcommand(s.name, s.help);
    if (s.has_m) cmd->add_option("--m", opt.m, "family index m >= 1");
    if (s.has_a) cmd->add_option("--a", opt.a, "offset 0 <= a <= m-1");
    if (s.has_order) cmd->add_option("--order", opt.order, "truncation order");
    if (s.has_n) cmd->add_option("--N", opt.N, "root of unity order");
    if (s.has_prec)
      cmd->add_option("--precision", opt.precision, "target bits");
    if (s.has_tail)
      cmd->add_option("--tail", opt.tail, "tail terms or 'optimal'");
    if (std::string(s.name) == "bailey") {
      cmd->add_option("--samples", opt.samples, "randomized instances");
      cmd->add_option("--seed", opt.seed, "random seed");
    }
    if (std::string(s.name) == "mellin" ||
        std::string(s.name) == "half-derivative")
      cmd->add_option("--t0", opt.t0, "evaluation point, 'p/q'");
    if (std::string(s.name) == "poisson")
      cmd->add_option("--tau", opt.tau, "upper-half-plane point 're,im' or 'i'");
    add_common(cmd);
    cmd->callback([&, fn = s.fn, name = std::string(s.name)] {
      runner = fn;
      command = "verify " + name;
    });
  }

  CLI::App* kashaev =
      app.add_subcommand("kashaev", "evaluate the nested sum at e^{2 pi i/N}");
  kashaev->add_option("--m", opt.m, "family index (default 1)");
  kashaev->add_option("--a", opt.a, "offset (default 0)");
  kashaev->add_option("--N", opt.N, "root of unity order")->required();
  kashaev->add_option("--precision", opt.precision, "target bits");
  add_common(kashaev);
  kashaev->callback([&] {
    value_mode = true;
    command = "kashaev";
  });

  CLI::App* suite = app.add_subcommand("suite", "run an acceptance suite");
  std::string suite_name = "all";
  suite->add_option("name", suite_name, "formal | numeric | all")
      ->check(CLI::IsMember({"formal", "numeric", "all"}));
  add_common(suite);
  suite->callback([&] { command = "suite " + suite_name; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (value_mode) {
      APComplex z = agq::eval_x_unity(opt.m, opt.a, opt.N, opt.precision);
      if (opt.json_out) {
        json out;
        out["schema"] = kSchema;
        out["command"] = command;
        out["parameters"] = {{"m", opt.m},
                             {"a", opt.a},
                             {"N", opt.N},
                             {"precision-bits", opt.precision}};
        out["value"] = complex_json(z);
        write_output(out.dump(2), opt.out_file);
      } else {
        write_output(agq::bigfloat_to_dec(z.re) + " + " +
                         agq::bigfloat_to_dec(z.im) + " i",
                     opt.out_file);
      }
      return 0;
    }

    if (runner) {
      auto start = std::chrono::steady_clock::now();
      Report rep = runner();
      rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      if (opt.json_out) {
        write_output(report_json(rep, command).dump(2), opt.out_file);
      } else {
        std::ostringstream text;
        print_report_text(rep, text);
        write_output(text.str(), opt.out_file);
      }
      return rep.passed() ? 0 : 1;
    }

    // suite
    agq::SuiteKind kind = suite_name == "formal"  ? agq::SuiteKind::formal
                          : suite_name == "numeric" ? agq::SuiteKind::numeric
                                                    : agq::SuiteKind::all;
    agq::SuiteResult res = agq::run_suite(kind, [](const Report& r) {
      std::cerr << r.name << ": " << r.status() << " (" << r.timing_ms
                << " ms)" << std::endl;
    });
    if (opt.json_out) {
      json out;
      out["schema"] = kSchema;
      out["command"] = command;
      out["status"] = res.passed() ? "pass" : "fail";
      json reports = json::array();
      for (const Report& r : res.reports)
        reports.push_back(report_json(r, command));
      out["reports"] = reports;
      write_output(out.dump(2), opt.out_file);
    } else {
      std::ostringstream text;
      for (const Report& r : res.reports) print_report_text(r, text);
      text << (res.passed() ? "suite: pass" : "suite: fail");
      write_output(text.str(), opt.out_file);
    }
    return res.passed() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
