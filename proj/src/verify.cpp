#include "spincorr/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <random>
#include <tuple>

#include "spincorr/correlations.hpp"
#include "spincorr/oracle.hpp"
#include "spincorr/parallel.hpp"

namespace spincorr {

namespace {

struct Point {
  EffectiveParams p;
  double t = 0;
};

struct Values {
  double q = 0, u = 0, f = 0;
};

Values closed_form(const ThermalXState& s) {
  const CorrelationResult r = correlations(s);
  return {r.q.value, r.u.value, r.f.value};
}

Values brute_force(const DensityMatrix4& rho) {
  return {oracle::discord_bruteforce(rho).value, oracle::lqu_bruteforce(rho), oracle::lqfi_bruteforce(rho)};
}

class Collector {
 public:
  Collector(std::string name, const VerifyOptions& opt) : opt_(opt) { suite_.name = std::move(name); }

  void compare(const Point& pt, const Values& expected, const Values& got, bool symmetry_tol = false) {
    std::lock_guard lock(mutex_);
    ++suite_.points;
    check(pt, "Q", std::abs(expected.q - got.q), symmetry_tol ? opt_.tol_symmetry : opt_.tol_q, suite_.max_dev_q);
    check(pt, "U", std::abs(expected.u - got.u), symmetry_tol ? opt_.tol_symmetry : opt_.tol_u, suite_.max_dev_u);
    check(pt, "F", std::abs(expected.f - got.f), symmetry_tol ? opt_.tol_symmetry : opt_.tol_f, suite_.max_dev_f);
  }

  void finish(VerifyReport& report) {
    std::sort(violations_.begin(), violations_.end(), [](const Violation& a, const Violation& b) {
      return std::tie(a.params.jz, a.params.r1, a.params.r2, a.t, a.measure) <
             std::tie(b.params.jz, b.params.r1, b.params.r2, b.t, b.measure);
    });
    report.suites.push_back(suite_);
    report.violations.insert(report.violations.end(), violations_.begin(), violations_.end());
  }

 private:
  void check(const Point& pt, const char* measure, double dev, double tol, double& max_dev) {
    if (!(dev <= tol)) violations_.push_back({suite_.name, measure, pt.p, pt.t, dev, tol});
    if (std::isnan(dev) || dev > max_dev) max_dev = dev;
  }

  const VerifyOptions& opt_;
  SuiteResult suite_;
  std::vector<Violation> violations_;
  std::mutex mutex_;
};

}  // namespace

VerifyReport run_verification(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> param(0.0, opt.param_max);
  std::uniform_real_distribution<double> signed_param(-opt.param_max, opt.param_max);
  std::uniform_real_distribution<double> log_t(std::log(opt.t_min), std::log(opt.t_max));
  std::uniform_real_distribution<double> coupling(-opt.param_max / 2, opt.param_max / 2);

  const auto n = static_cast<std::size_t>(std::max(opt.samples, 0));
  const std::size_t n_small = std::max<std::size_t>(1, n / 10);

  // draw everything up front so results do not depend on thread scheduling
  std::vector<Point> oracle_pts(n), symmetry_pts(n), unitary_pts(n_small);
  for (auto& pt : oracle_pts) {
    const double jz = param(rng), r1 = param(rng), r2 = param(rng);
    pt = {{jz, r1, r2}, std::exp(log_t(rng))};
  }
  for (auto& pt : symmetry_pts) {
    const double jz = signed_param(rng), r1 = param(rng), r2 = param(rng);
    pt = {{jz, r1, r2}, std::exp(log_t(rng))};
  }
  std::vector<std::pair<Couplings, double>> phase_pts(n_small);
  for (auto& [c, t] : phase_pts) {
    c.jx = coupling(rng);
    c.jy = coupling(rng);
    c.jz = coupling(rng);
    c.dz = coupling(rng);
    c.gz = coupling(rng);
    t = std::exp(log_t(rng));
  }
  std::vector<std::array<CMatrix4, 3>> unitaries(n_small);
  for (std::size_t i = 0; i < n_small; ++i) {
    const double jz = param(rng), r1 = param(rng), r2 = param(rng);
    unitary_pts[i] = {{jz, r1, r2}, std::exp(log_t(rng))};
    const CMatrix2 ua = oracle::random_unitary2(rng);
    const CMatrix2 ub = oracle::random_unitary2(rng);
    unitaries[i] = {oracle::fixed_transforms().o, oracle::fixed_transforms().h2, kron(ua, ub)};
  }

  VerifyReport report;

  Collector oracle_suite("oracle", opt);
  parallel_for(n, 8, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const ThermalXState s = gibbs_state(oracle_pts[i].p, oracle_pts[i].t);
      oracle_suite.compare(oracle_pts[i], closed_form(s), brute_force(dense_matrix(s)));
    }
  });
  oracle_suite.finish(report);

  Collector symmetry_suite("symmetry", opt);
  for (const Point& pt : symmetry_pts) {
    const Point mirror{{-pt.p.jz, pt.p.r2, pt.p.r1}, pt.t};
    symmetry_suite.compare(pt, closed_form(gibbs_state(pt.p, pt.t)), closed_form(gibbs_state(mirror.p, mirror.t)),
                           true);
  }
  symmetry_suite.finish(report);

  Collector phase_suite("phases", opt);
  parallel_for(n_small, 2, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto& [c, t] = phase_pts[i];
      const ThermalXState s = gibbs_state(c, t);
      phase_suite.compare({effective_params(c), t}, closed_form(s.phase_free()), brute_force(dense_matrix(s)));
    }
  });
  phase_suite.finish(report);

  Collector unitary_suite("local-unitary", opt);
  parallel_for(n_small, 2, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const ThermalXState s = gibbs_state(unitary_pts[i].p, unitary_pts[i].t);
      const Values expected = closed_form(s);
      const DensityMatrix4 rho = dense_matrix(s);
      for (const CMatrix4& u : unitaries[i]) unitary_suite.compare(unitary_pts[i], expected, brute_force(rho.conjugated(u)));
    }
  });
  unitary_suite.finish(report);

  return report;
}

}  // namespace spincorr
