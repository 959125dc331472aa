#pragma once

#include "agq/report.hpp"

#include <functional>
#include <vector>

namespace agq {

// The thirteen acceptance checks. Parameters (orders, truncations,
// precisions, tolerances, seeds) are pinned here so every caller runs the
// same matrix. Each returns one Report; all numeric checks share the same
// 256-bit precision because the underlying default is process-wide.
Report criterion_t_expansion_exact();        //  1: both routes through t^12
Report criterion_glaisher_numbers();         //  2: T(0) = 1, T(1) = 23
Report criterion_t_value_routes();           //  3: Bernoulli vs genfun
Report criterion_sum_product();              //  4: multi-sum = product, both forms
Report criterion_triple_product();           //  5: theta = product
Report criterion_h_function();               //  6: closed form + difference eqs
Report criterion_bridge_identities();        //  7: derivative-at-1 bridge
Report criterion_bailey_machinery();         //  8: finite q-binomial engine
Report criterion_root_of_unity();            //  9: double-sum + omega identities
Report criterion_asymptotic_expansion();     // 10: error decreasing in N
Report criterion_poisson_modularity();       // 11: theta transform + M^2 = I
Report criterion_nearly_modular();           // 12: reformulated expansion
Report criterion_mellin();                   // 13: theta vs L-value series

enum class SuiteKind { formal, numeric, all };

struct SuiteResult {
  std::vector<Report> reports;  // criterion order
  bool passed() const {
    for (const auto& r : reports)
      if (!r.passed()) return false;
    return true;
  }
};

// Runs the selected criteria (formal = 1-8, numeric = 9-13) on a small
// thread pool capped by AGQ_THREADS (default: hardware concurrency).
// Reports are returned in criterion order regardless of scheduling;
// `progress`, when set, is called once per finished criterion from the
// assembling thread, in order.
SuiteResult run_suite(SuiteKind kind,
                      const std::function<void(const Report&)>& progress = {});

}  // namespace agq
