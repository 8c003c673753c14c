#pragma once

// Identity and bound checks over a parameter grid, shared by the CLI `selftest`
// command. Sampling uses a fixed seed so reports are reproducible.

#include "twistcert/chebyshev.hpp"
#include "twistcert/riley.hpp"
#include "twistcert/su11.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace twistcert {

struct SelfTestOptions {
  int max_k = 7;
  int max_abs_n = 4;
  int pell_range = 12;
  int samples = 200;
  std::uint64_t seed = 20120101;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  int cases = 0;
  std::string detail;  // first failure
};

namespace detail {
inline void record(CheckResult& c, bool ok, const std::string& what) {
  ++c.cases;
  if (!ok && c.passed) {
    c.passed = false;
    c.detail = what;
  }
}

template <class F>
void for_grid(const SelfTestOptions& opt, F&& f) {
  for (int k = 1; k <= opt.max_k; ++k)
    for (int n = -opt.max_abs_n; n <= opt.max_abs_n; ++n)
      if (n != 0) f(DoubleTwistKnot::raw(k, n));
}
}  // namespace detail

inline CheckResult check_pell(const SelfTestOptions& opt) {
  CheckResult c{"pell_identity", true, 0, {}};
  for (int j = -opt.pell_range; j <= opt.pell_range; ++j) detail::record(c, pell_identity_check(j), "j=" + std::to_string(j));
  return c;
}

inline CheckResult check_chebyshev_bound(const SelfTestOptions& opt) {
  CheckResult c{"chebyshev_bound", true, 0, {}};
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> zdist(-2.0, 2.0);
  std::uniform_int_distribution<int> jdist(-opt.pell_range, opt.pell_range);
  for (int i = 0; i < opt.samples; ++i) {
    const int j = jdist(rng);
    const double z = zdist(rng);
    const double v = cheb_eval(j - 1, z);
    detail::record(c, std::abs(v) <= std::abs(j) + 1e-12, "j=" + std::to_string(j) + " z=" + std::to_string(z));
  }
  for (int j = -opt.pell_range; j <= opt.pell_range; ++j) {
    detail::record(c, cheb_eval(j - 1, 2.0) == j, "S_{j-1}(2) j=" + std::to_string(j));
    detail::record(c, cheb_eval(j - 1, -2.0) == ((j - 1) % 2 == 0 ? j : -j), "S_{j-1}(-2) j=" + std::to_string(j));
  }
  return c;
}

inline CheckResult check_sine_bound(const SelfTestOptions& opt) {
  CheckResult c{"sine_bound", true, 0, {}};
  std::mt19937_64 rng(opt.seed + 1);
  std::uniform_real_distribution<double> tdist(-10.0, 10.0);
  std::uniform_int_distribution<int> kdist(-20, 20);
  for (int i = 0; i < opt.samples; ++i) {
    const int k = kdist(rng);
    const double t = tdist(rng);
    detail::record(c, std::abs(std::sin(k * t)) <= std::abs(k * std::sin(t)) + 1e-12,
                   "k=" + std::to_string(k) + " t=" + std::to_string(t));
  }
  return c;
}

inline CheckResult check_alpha_lambda(const SelfTestOptions& opt) {
  CheckResult c{"alpha_lambda_factorization", true, 0, {}};
  for (int k = 1; k <= opt.max_k + 2; ++k)
    detail::record(c, alpha_lambda_identity_check(DoubleTwistKnot::raw(k, 1)), "k=" + std::to_string(k));
  return c;
}

inline CheckResult check_oracle(const SelfTestOptions& opt) {
  CheckResult c{"oracle_equivalence", true, 0, {}};
  detail::for_grid(opt, [&](const DoubleTwistKnot& K) {
    detail::record(c, oracle_agrees(riley_poly(K), riley_oracle(K)), K.name());
  });
  return c;
}

inline CheckResult check_degree_and_parity(const SelfTestOptions& opt) {
  CheckResult c{"degree_law_and_x_parity", true, 0, {}};
  detail::for_grid(opt, [&](const DoubleTwistKnot& K) {
    const RileyData r = riley_poly(K);
    const long p = bridge_determinant(K);
    const IntPolyXY lead = r.phi_poly.leading_in_second();
    const bool unit_lead = lead == IntPolyXY(1) || lead == IntPolyXY(-1);
    detail::record(c, riley_degree(r) == (p - 1) / 2 && even_in_first(r.phi_poly) && unit_lead, K.name());
  });
  return c;
}

inline CheckResult check_boundary_value(const SelfTestOptions& opt) {
  CheckResult c{"odd_k_boundary_value", true, 0, {}};
  detail::for_grid(opt, [&](const DoubleTwistKnot& K) {
    if (!K.even_k()) detail::record(c, boundary_value_identity_check(K), K.name());
  });
  return c;
}

inline CheckResult check_negative_n_form(const SelfTestOptions& opt) {
  CheckResult c{"negative_n_form", true, 0, {}};
  detail::for_grid(opt, [&](const DoubleTwistKnot& K) {
    if (K.n < 0) detail::record(c, negative_n_form_check(K), K.name());
  });
  return c;
}

inline CheckResult check_meridian_power(const SelfTestOptions&) {
  CheckResult c{"meridian_power", true, 0, {}};
  PrecisionScope scope(kDefaultPrecisionBits);
  for (long r = 2; r <= 50; ++r) {
    const auto [A, B] = build_rep({meridian_eigenvalue(r), Complex(Real(3))});
    detail::record(c, meridian_power_check(A, r) < Real(1e-10), "r=" + std::to_string(r));
  }
  return c;
}

inline std::vector<CheckResult> run_selftest(const SelfTestOptions& opt) {
  return {check_pell(opt),          check_chebyshev_bound(opt), check_sine_bound(opt),
          check_alpha_lambda(opt),  check_oracle(opt),          check_degree_and_parity(opt),
          check_boundary_value(opt), check_negative_n_form(opt), check_meridian_power(opt)};
}

}  // namespace twistcert
