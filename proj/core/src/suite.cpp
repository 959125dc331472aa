#include "agq/suite.hpp"

#include "agq/bailey.hpp"
#include "agq/character.hpp"
#include "agq/halfderiv.hpp"
#include "agq/identities.hpp"
#include "agq/lvalues.hpp"
#include "agq/unity.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace agq {

namespace {

// pinned acceptance matrix
constexpr int kTExpansionOrder = 12;
constexpr int kRouteMMax = 5;
constexpr int kRouteNMax = 20;
constexpr int kSumProductOrder = 60;
constexpr int kTripleQOrder = 40;
constexpr int kTripleXRange = 20;
constexpr int kHWindow = 12;
constexpr int kBridgeOrder = 25;
constexpr int kBcAMax = 8;
constexpr int kBcOrder = 40;
constexpr int kBaileyNMax = 6;
constexpr int kBaileySamples = 100;
constexpr long kBaileySeed = 20240911;
constexpr int kNumericBits = 256;
constexpr int kKashaevNMax = 60;
constexpr int kKashaevRelExp = 128;  // relative diff < 2^-128
constexpr int kOmegaNMax = 50;
constexpr int kAsymptoticNs[] = {25, 50, 100, 200};
constexpr int kNearlyNs[] = {50, 100, 200};

std::string fmt_ma(int m, int a) {
  std::ostringstream out;
  out << "(m,a)=(" << m << "," << a << ")";
  return out.str();
}

// copy sub-report details (and seed) into an aggregate
void absorb(Report& dst, const Report& sub, const std::string& tag) {
  for (CheckDetail d : sub.details) {
    if (!tag.empty()) d.name = tag + ": " + d.name;
    dst.details.push_back(std::move(d));
  }
  if (sub.seed) dst.seed = sub.seed;
}

}  // namespace

Report criterion_t_expansion_exact() {
  Report rep;
  rep.name = "t-expansion-exact";
  rep.param("order", kTExpansionOrder);
  for (int m = 1; m <= 4; ++m)
    for (int a = 0; a < m; ++a) {
      XSeriesResult res = verify_theorem(m, a, kTExpansionOrder);
      if (res.passed()) {
        rep.ok("multi-sum route equals L-value route", fmt_ma(m, a));
      } else {
        rep.fail("multi-sum route equals L-value route", fmt_ma(m, a),
                 "equal through t^" + std::to_string(kTExpansionOrder),
                 "equal through t^" + std::to_string(res.equal_through));
      }
    }
  return rep;
}

Report criterion_glaisher_numbers() {
  Report rep;
  rep.name = "glaisher-numbers";
  auto expect = [&](const char* route, int n, const Rational& got, long want) {
    std::ostringstream loc;
    loc << route << " n=" << n;
    if (got == want) {
      rep.ok("m=1 value matches", loc.str());
    } else {
      rep.fail("m=1 value matches", loc.str(), std::to_string(want),
               rational_to_string(got));
    }
  };
  expect("bernoulli", 0, t_value_bernoulli(1, 0, 0), 1);
  expect("bernoulli", 1, t_value_bernoulli(1, 0, 1), 23);
  expect("genfun", 0, t_value_genfun(1, 0, 0), 1);
  expect("genfun", 1, t_value_genfun(1, 0, 1), 23);
  return rep;
}

Report criterion_t_value_routes() {
  Report rep;
  rep.name = "t-value-routes";
  rep.param("m-max", kRouteMMax);
  rep.param("n-max", kRouteNMax);
  for (int m = 1; m <= kRouteMMax; ++m)
    for (int a = 0; a < m; ++a)
      for (int n = 0; n <= kRouteNMax; ++n) {
        Rational lhs = t_value_bernoulli(m, a, n);
        Rational rhs = t_value_genfun(m, a, n);
        if (lhs != rhs) {
          std::ostringstream loc;
          loc << fmt_ma(m, a) << " n=" << n;
          rep.fail("both routes agree", loc.str(), rational_to_string(rhs),
                   rational_to_string(lhs));
          return rep;
        }
      }
  rep.ok("both routes agree");
  return rep;
}

Report criterion_sum_product() {
  Report rep;
  rep.name = "sum-product";
  rep.param("q-order", kSumProductOrder);
  for (int m = 2; m <= 4; ++m)
    for (int a = 0; a < m; ++a) {
      absorb(rep, verify_andrews_gordon(m, a, kSumProductOrder), fmt_ma(m, a));
      absorb(rep, verify_variant_ag(m, a, kSumProductOrder), fmt_ma(m, a));
    }
  return rep;
}

Report criterion_triple_product() {
  Report rep;
  rep.name = "triple-product";
  rep.param("q-order", kTripleQOrder);
  rep.param("x-range", kTripleXRange);
  absorb(rep, verify_jacobi_triple(kTripleQOrder, kTripleXRange), "");
  return rep;
}

Report criterion_h_function() {
  Report rep;
  rep.name = "h-function";
  rep.param("window", kHWindow);
  for (int m = 1; m <= 3; ++m)
    for (int a = 0; a < m; ++a) {
      absorb(rep, verify_H_closed_form(m, a, kHWindow, kHWindow), fmt_ma(m, a));
      absorb(rep, verify_H_difference_equation(m, a, kHWindow, kHWindow),
             fmt_ma(m, a));
      absorb(rep, verify_Htilde_difference(m, a, kHWindow, kHWindow),
             fmt_ma(m, a));
    }
  return rep;
}

Report criterion_bridge_identities() {
  Report rep;
  rep.name = "bridge-identities";
  rep.param("q-order", kBridgeOrder);
  for (int m = 1; m <= 3; ++m)
    for (int a = 0; a < m; ++a)
      absorb(rep, verify_bridge_identity(m, a, kBridgeOrder), fmt_ma(m, a));
  return rep;
}

Report criterion_bailey_machinery() {
  Report rep;
  rep.name = "bailey-machinery";
  rep.param("a-max", kBcAMax);
  rep.param("samples", kBaileySamples);
  absorb(rep, verify_bc_lemma(kBcAMax, kBcOrder), "");
  absorb(rep, verify_bailey_machinery(kBaileyNMax, kBaileySamples, kBaileySeed),
         "");
  return rep;
}

Report criterion_root_of_unity() {
  using boost::multiprecision::pow;
  Report rep;
  rep.name = "root-of-unity";
  rep.param("N-max", kKashaevNMax);
  rep.precision_bits = kNumericBits;
  BigFloat tol = pow(BigFloat(2), -kKashaevRelExp);
  BigFloat worst = 0;
  bool kash_ok = true;
  for (int N = 1; N <= kKashaevNMax; ++N) {
    APComplex x = eval_x_unity(2, 0, N, kNumericBits);
    BigFloat rel = (kashaev_double_sum(N, kNumericBits) - x).abs() / x.abs();
    if (rel > worst) worst = rel;
    if (rel >= tol && kash_ok) {
      kash_ok = false;
      rep.fail("double sum equals nested sum", "N=" + std::to_string(N),
               "< " + bigfloat_to_dec(tol), bigfloat_to_dec(rel));
    }
  }
  if (kash_ok) rep.ok("double sum equals nested sum");
  rep.param("max-relative-diff", bigfloat_to_dec(worst));

  bool omega_ok = true;
  for (int N = 1; N <= kOmegaNMax; ++N) {
    Report sub = verify_omega_identities(N, kNumericBits);
    if (!sub.passed()) {
      omega_ok = false;
      absorb(rep, sub, "N=" + std::to_string(N));
    }
  }
  if (omega_ok) rep.ok("omega identities", "N<=" + std::to_string(kOmegaNMax));
  return rep;
}

Report criterion_asymptotic_expansion() {
  Report rep;
  rep.name = "asymptotic-expansion";
  rep.precision_bits = kNumericBits;
  constexpr std::pair<int, int> cells[] = {{1, 0}, {2, 0}, {2, 1}};
  for (auto [m, a] : cells) {
    BigFloat prev = -1, last_residual = 0;
    bool decreasing = true;
    for (int N : kAsymptoticNs) {
      APComplex x = eval_x_unity(m, a, N, kNumericBits);
      BigFloat residual = (x - asymptotic_rhs(m, a, N, kNumericBits, -1)).abs();
      BigFloat rel = residual / x.abs();
      rep.param("rel-error[" + fmt_ma(m, a) + " N=" + std::to_string(N) + "]",
                bigfloat_to_dec(rel));
      if (prev >= 0 && rel >= prev) decreasing = false;
      prev = rel;
      last_residual = residual;
    }
    if (decreasing) {
      rep.ok("relative error strictly decreases in N", fmt_ma(m, a));
    } else {
      rep.fail("relative error strictly decreases in N", fmt_ma(m, a),
               "monotone over N=25,50,100,200", "see rel-error params");
    }
    int last_n = kAsymptoticNs[3];
    int terms = optimal_tail_terms(m, a, last_n, kNumericBits);
    BigFloat omitted = tail_term_magnitude(m, a, last_n, terms, kNumericBits);
    if (last_residual <= 2 * omitted) {
      rep.ok("residual within twice the first omitted term", fmt_ma(m, a));
    } else {
      rep.fail("residual within twice the first omitted term", fmt_ma(m, a),
               "<= " + bigfloat_to_dec(2 * omitted),
               bigfloat_to_dec(last_residual));
    }
  }
  return rep;
}

Report criterion_poisson_modularity() {
  Report rep;
  rep.name = "poisson-modularity";
  rep.precision_bits = kNumericBits;
  const APComplex taus[] = {APComplex(BigFloat(0), BigFloat(1)),
                            APComplex(BigFloat(1) / 2, BigFloat(1)),
                            APComplex(BigFloat(0), BigFloat(2))};
  const char* tau_names[] = {"i", "1/2+i", "2i"};
  for (int m = 1; m <= 4; ++m) {
    for (int t = 0; t < 3; ++t) {
      Report sub = verify_poisson_modularity(m, taus[t], kNumericBits);
      std::ostringstream tag;
      tag << "m=" << m << " tau=" << tau_names[t];
      if (sub.passed())
        rep.ok("theta vector transform", tag.str());
      else
        absorb(rep, sub, tag.str());
    }
    absorb(rep, verify_modular_matrix(m, kNumericBits),
           "m=" + std::to_string(m));
  }
  return rep;
}

Report criterion_nearly_modular() {
  Report rep;
  rep.name = "nearly-modular";
  rep.precision_bits = kNumericBits;
  for (int m = 1; m <= 2; ++m)
    for (int N : kNearlyNs) {
      Report sub = verify_nearly_modular(m, N, kNumericBits, -1);
      std::ostringstream tag;
      tag << "m=" << m << " N=" << N;
      if (sub.passed())
        rep.ok("residual within twice the first omitted term", tag.str());
      else
        absorb(rep, sub, tag.str());
    }
  return rep;
}

Report criterion_mellin() {
  Report rep;
  rep.name = "mellin";
  rep.precision_bits = kNumericBits;
  rep.param("t0", "1/100");
  constexpr std::pair<int, int> cells[] = {{1, 0}, {2, 0}, {2, 1}};
  for (auto [m, a] : cells) {
    PeriodicCharacter chi = chi_general(m, a);
    Rational t1 = rational(1, 100), t2 = rational(1, 200);
    MellinCheck c1 = mellin_asymptotic_check(
        chi, t1, mellin_optimal_terms(chi, t1, kNumericBits), kNumericBits);
    MellinCheck c2 = mellin_asymptotic_check(
        chi, t2, mellin_optimal_terms(chi, t2, kNumericBits), kNumericBits);
    std::string loc = fmt_ma(m, a);
    rep.param("residual[" + loc + " t0=1/100]", c1.residual);
    rep.param("residual[" + loc + " t0=1/200]", c2.residual);
    if (c1.within_bound) {
      rep.ok("residual within twice the first omitted term", loc);
    } else {
      rep.fail("residual within twice the first omitted term", loc,
               "<= 2 * " + c1.omitted_term, c1.residual);
    }
    if (BigFloat(c2.residual) < BigFloat(c1.residual)) {
      rep.ok("residual shrinks from t0=1/100 to t0=1/200", loc);
    } else {
      rep.fail("residual shrinks from t0=1/100 to t0=1/200", loc,
               "< " + c1.residual, c2.residual);
    }
  }
  return rep;
}

SuiteResult run_suite(SuiteKind kind,
                      const std::function<void(const Report&)>& progress) {
  using Criterion = Report (*)();
  struct Cell {
    Criterion fn;
    bool formal;
  };
  const Cell cells[] = {
      {criterion_t_expansion_exact, true},
      {criterion_glaisher_numbers, true},
      {criterion_t_value_routes, true},
      {criterion_sum_product, true},
      {criterion_triple_product, true},
      {criterion_h_function, true},
      {criterion_bridge_identities, true},
      {criterion_bailey_machinery, true},
      {criterion_root_of_unity, false},
      {criterion_asymptotic_expansion, false},
      {criterion_poisson_modularity, false},
      {criterion_nearly_modular, false},
      {criterion_mellin, false},
  };

  std::vector<Criterion> selected;
  for (const Cell& c : cells)
    if (kind == SuiteKind::all || (kind == SuiteKind::formal) == c.formal)
      selected.push_back(c.fn);

  unsigned threads = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("AGQ_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) threads = static_cast<unsigned>(v);
  }
  if (threads < 1) threads = 1;
  if (threads > selected.size()) threads = static_cast<unsigned>(selected.size());

  std::vector<Report> results(selected.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      auto start = std::chrono::steady_clock::now();
      results[i] = selected[i]();
      results[i].timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult out;
  for (Report& r : results) {
    if (progress) progress(r);
    out.reports.push_back(std::move(r));
  }
  return out;
}

}  // namespace agq
