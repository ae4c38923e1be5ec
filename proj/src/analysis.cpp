#include "spincorr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spincorr/detail/thermal.hpp"
#include "spincorr/error.hpp"
#include "spincorr/kernels.hpp"
#include "spincorr/parallel.hpp"

namespace spincorr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

EffectiveParams base_params(const SweepSpec& spec) {
  if (const auto* p = std::get_if<EffectiveParams>(&spec.fixed)) return *p;
  return effective_params(std::get<Couplings>(spec.fixed));
}

EffectiveParams params_at(const SweepSpec& spec, const EffectiveParams& base, double x) {
  EffectiveParams p = base;
  switch (spec.axis) {
    case Axis::R1:
      p.r1 = x;
      break;
    case Axis::R2:
      p.r2 = x;
      break;
    case Axis::Jz:
      p.jz = x;
      break;
    case Axis::T:
      break;
  }
  return p;
}

bool usable_temperature(double t) { return std::isfinite(t) && t > 0 && std::isfinite(1.0 / t); }

}  // namespace

const char* to_string(Axis a) {
  switch (a) {
    case Axis::T:
      return "T";
    case Axis::R1:
      return "r1";
    case Axis::R2:
      return "r2";
    case Axis::Jz:
      return "jz";
  }
  return "?";
}

const char* to_string(Measure m) {
  switch (m) {
    case Measure::Q:
      return "Q";
    case Measure::U:
      return "U";
    case Measure::F:
      return "F";
  }
  return "?";
}

std::optional<Axis> parse_axis(std::string_view s) {
  if (s == "T" || s == "t") return Axis::T;
  if (s == "r1") return Axis::R1;
  if (s == "r2") return Axis::R2;
  if (s == "jz") return Axis::Jz;
  return std::nullopt;
}

const char* to_string(BehaviorKind k) {
  switch (k) {
    case BehaviorKind::I:
      return "I";
    case BehaviorKind::II:
      return "II";
    case BehaviorKind::III:
      return "III";
    case BehaviorKind::IV:
      return "IV";
  }
  return "?";
}

const char* to_string(ChangeKind k) { return k == ChangeKind::Cusp ? "cusp" : "kink"; }

const BranchPair& SweepRow::measure(Measure m) const {
  switch (m) {
    case Measure::Q:
      return q;
    case Measure::U:
      return u;
    case Measure::F:
      return f;
  }
  return q;
}

void validate(const SweepSpec& spec) {
  if (!std::isfinite(spec.min) || !std::isfinite(spec.max)) throw SpecError("sweep range must be finite");
  if (!(spec.min < spec.max)) throw SpecError("sweep range needs min < max");
  if (spec.steps < 2) throw SpecError("sweep needs at least 2 steps");
  if (spec.spacing == Spacing::Log && !(spec.min > 0)) throw SpecError("log spacing needs min > 0");
  if (spec.measures.empty()) throw SpecError("no measures selected");
  if (std::holds_alternative<Couplings>(spec.fixed) && (spec.axis == Axis::R1 || spec.axis == Axis::R2))
    throw SpecError("r1/r2 sweeps need effective parameters");
  if (spec.axis == Axis::T) {
    if (!usable_temperature(spec.min)) throw SpecError("temperatures must be positive");
  } else if (!usable_temperature(spec.t)) {
    throw SpecError("temperature must be positive");
  }
  if ((spec.axis == Axis::R1 || spec.axis == Axis::R2) && spec.min < 0)
    throw SpecError("r1 and r2 are non-negative");
  const EffectiveParams p = base_params(spec);
  if (!std::isfinite(p.jz) || !std::isfinite(p.r1) || !std::isfinite(p.r2) || p.r1 < 0 || p.r2 < 0)
    throw SpecError("parameters must be finite with r1, r2 >= 0");
}

std::vector<double> axis_values(const SweepSpec& spec) {
  validate(spec);
  const auto n = static_cast<std::size_t>(spec.steps);
  std::vector<double> xs(n);
  const double denom = static_cast<double>(n - 1);
  if (spec.spacing == Spacing::Linear) {
    for (std::size_t i = 0; i < n; ++i) xs[i] = spec.min + (spec.max - spec.min) * (static_cast<double>(i) / denom);
  } else {
    const double l0 = std::log(spec.min), l1 = std::log(spec.max);
    for (std::size_t i = 0; i < n; ++i) xs[i] = std::exp(l0 + (l1 - l0) * (static_cast<double>(i) / denom));
  }
  xs.front() = spec.min;
  xs.back() = spec.max;
  return xs;
}

SweepSpec default_temperature_sweep(const EffectiveParams& p) {
  SweepSpec s;
  s.fixed = p;
  s.axis = Axis::T;
  s.min = 1e-2;
  s.max = 10.0 * std::max({1.0, std::abs(p.jz), p.r1, p.r2});
  s.steps = 500;
  s.spacing = Spacing::Log;
  return s;
}

std::vector<MeasureTriple> evaluate_points(std::span<const EffectiveParams> params, std::span<const double> t) {
  if (params.size() != t.size()) throw ValidationError("params and temperatures differ in length");
  const std::size_t n = params.size();
  std::vector<double> jz(n), r1(n), r2(n), beta(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!usable_temperature(t[i])) throw DomainError("temperature must be positive");
    jz[i] = params[i].jz;
    r1[i] = params[i].r1;
    r2[i] = params[i].r2;
    beta[i] = 1.0 / t[i];
  }

  std::vector<double> q0(n), q1(n), u0(n), u1(n), f0(n), f1(n);
  const KernelIsa isa = active_isa();
  parallel_for(n, 4096, [&](std::size_t b, std::size_t e) {
    const std::size_t len = e - b;
    const PointBatch in{{jz.data() + b, len}, {r1.data() + b, len}, {r2.data() + b, len}, {beta.data() + b, len}};
    const BranchBatch out{{q0.data() + b, len}, {q1.data() + b, len}, {u0.data() + b, len},
                          {u1.data() + b, len}, {f0.data() + b, len}, {f1.data() + b, len}};
    evaluate_branches(isa, in, out);
  });

  std::vector<MeasureTriple> res(n);
  for (std::size_t i = 0; i < n; ++i)
    res[i] = {BranchPair::from(q0[i], q1[i]), BranchPair::from(u0[i], u1[i]), BranchPair::from(f0[i], f1[i])};
  return res;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  const std::vector<double> xs = axis_values(spec);
  const EffectiveParams base = base_params(spec);
  const std::size_t n = xs.size();

  std::vector<SweepRow> rows(n);
  std::vector<EffectiveParams> ps(n);
  std::vector<double> ts(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].x = xs[i];
    rows[i].params = ps[i] = params_at(spec, base, xs[i]);
    rows[i].t = ts[i] = spec.axis == Axis::T ? xs[i] : spec.t;
  }
  const std::vector<MeasureTriple> values = evaluate_points(ps, ts);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].q = values[i].q;
    rows[i].u = values[i].u;
    rows[i].f = values[i].f;
  }
  return rows;
}

// ---------------------------------------------------------------------------

BehaviorType classify_behavior(std::span<const double> t, std::span<const double> v, double eps0) {
  if (t.size() != v.size()) throw ClassificationError("curve T and value columns differ in length");
  if (t.size() < 50) throw ClassificationError("curve too coarse: fewer than 50 points");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1])) throw ClassificationError("curve T values must be strictly increasing");
  if (t.front() > 1e-2) throw ClassificationError("curve must start at T <= 1e-2");

  BehaviorType out;
  // zigzag: a turning point is confirmed once the curve moves eps0 away from it
  int dir = 0;
  std::size_t ext = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (dir == 0) {
      if (v[i] < v[0] - eps0) {
        dir = -1;
        ext = i;
      } else if (v[i] > v[0] + eps0) {
        dir = 1;
        ext = i;
      }
    } else if (dir < 0) {
      if (v[i] < v[ext]) {
        ext = i;
      } else if (v[i] > v[ext] + eps0) {
        out.extrema.push_back({t[ext], v[ext], false});
        dir = 1;
        ext = i;
      }
    } else {
      if (v[i] > v[ext]) {
        ext = i;
      } else if (v[i] < v[ext] - eps0) {
        out.extrema.push_back({t[ext], v[ext], true});
        dir = -1;
        ext = i;
      }
    }
  }

  const double start = v.front();
  const auto has_max = std::any_of(out.extrema.begin(), out.extrema.end(), [](const Extremum& e) { return e.is_max; });
  if (std::abs(start - 1.0) <= kStartTol) {
    if (out.extrema.empty()) {
      out.kind = BehaviorKind::I;
      return out;
    }
    for (std::size_t i = 0; i + 1 < out.extrema.size(); ++i)
      if (!out.extrema[i].is_max && out.extrema[i + 1].is_max) {
        out.kind = BehaviorKind::II;
        return out;
      }
    throw ClassificationError("curve starts at 1 but has no minimum followed by a maximum");
  }
  if (start <= eps0) {
    if (has_max) {
      out.kind = BehaviorKind::III;
      return out;
    }
    throw ClassificationError("curve starts at 0 without an interior maximum");
  }
  if (std::abs(start - 1.0 / 3.0) <= kStartTol) {
    out.kind = BehaviorKind::IV;
    return out;
  }
  throw ClassificationError("curve start value matches no behavior type");
}

BehaviorReport classify_sweep(const std::vector<SweepRow>& rows, std::span<const Measure> measures, double eps0) {
  BehaviorReport report;
  std::vector<double> t(rows.size()), v(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) t[i] = rows[i].t;
  std::optional<BehaviorKind> common;
  bool agree = true;
  std::size_t classified = 0;
  for (Measure m : measures) {
    const auto k = static_cast<std::size_t>(m);
    for (std::size_t i = 0; i < rows.size(); ++i) v[i] = rows[i].measure(m).value;
    try {
      report.per_measure[k] = classify_behavior(t, v, eps0);
      ++classified;
      if (!common) common = report.per_measure[k]->kind;
      else if (*common != report.per_measure[k]->kind) agree = false;
    } catch (const ClassificationError& e) {
      report.errors[k] = e.what();
      agree = false;
    }
  }
  report.agree = agree && classified > 0;
  if (report.agree) report.consensus = common;
  return report;
}

// ---------------------------------------------------------------------------

std::vector<double> analytic_crossings(const SweepSpec& spec) {
  const EffectiveParams p = base_params(spec);
  std::vector<double> roots;
  switch (spec.axis) {
    case Axis::R1:
      roots.push_back(2.0 * std::abs(p.jz) - p.r2);
      break;
    case Axis::R2:
      roots.push_back(2.0 * std::abs(p.jz) - p.r1);
      break;
    case Axis::Jz: {
      // h = 0 only touches the boundary
      const double h = (p.r1 + p.r2) / 2.0;
      if (h > 0) roots.insert(roots.end(), {-h, h});
      break;
    }
    case Axis::T:
      break;
  }
  std::erase_if(roots, [&](double x) { return !(x > spec.min && x < spec.max); });
  return roots;
}

std::vector<SuddenChange> detect_sudden_changes(const SweepSpec& spec) {
  if (spec.axis == Axis::T) throw SpecError("sudden-change scans run along r1, r2 or jz");
  const std::vector<SweepRow> rows = sweep(spec);
  const std::vector<double> roots = analytic_crossings(spec);
  const std::size_t n = rows.size();
  std::vector<SuddenChange> events;
  if (n < 4) return events;

  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rows[i].x;
  const auto slope = [&](std::size_t i) { return (y[i + 1] - y[i]) / (x[i + 1] - x[i]); };

  for (Measure m : spec.measures) {
    for (std::size_t i = 0; i < n; ++i) y[i] = rows[i].measure(m).value;

    std::vector<double> curvature;
    curvature.reserve(n);
    for (std::size_t k = 1; k + 1 < n; ++k) curvature.push_back(std::abs(slope(k) - slope(k - 1)));
    std::nth_element(curvature.begin(), curvature.begin() + static_cast<std::ptrdiff_t>(curvature.size() / 2),
                     curvature.end());
    const double threshold = std::max(10.0 * curvature[curvature.size() / 2], 1e-9);

    std::optional<std::size_t> last;  // last grid point with a definite branch
    for (std::size_t j = 0; j < n; ++j) {
      const Branch b = rows[j].measure(m).active;
      if (b == Branch::Tie) continue;
      if (last && rows[*last].measure(m).active != b) {
        const std::size_t i = *last;
        if (i >= 1 && j + 1 < n) {
          const double sl = slope(i - 1), sr = slope(j);
          const double jump = sr - sl;
          if (std::abs(jump) > threshold) {
            double loc = 0.5 * (x[i] + x[j]);
            if (sl != sr) {
              const double cross = (y[j] - y[i] - sr * x[j] + sl * x[i]) / (sl - sr);
              if (cross >= x[i - 1] && cross <= x[j + 1]) loc = cross;
            }
            SuddenChange ev;
            ev.measure = m;
            ev.location = loc;
            ev.jump = jump;
            ev.kind = sl * sr < 0 ? ChangeKind::Cusp : ChangeKind::Kink;
            ev.analytic = kNaN;
            double best = std::numeric_limits<double>::infinity();
            for (double r : roots)
              if (std::abs(r - loc) < best) {
                best = std::abs(r - loc);
                ev.analytic = r;
              }
            const double step = std::max(x[i + 1] - x[i], x[j] - x[j - 1]);
            ev.matches_analytic = best <= step * (1 + 1e-9);
            events.push_back(ev);
          }
        }
      }
      last = j;
    }
  }
  return events;
}

// ---------------------------------------------------------------------------

ZeroTLimit zero_t_limit(const EffectiveParams& p) {
  const std::array<double, 4> e = {p.jz - p.r1, -p.jz - p.r2, -p.jz + p.r2, p.jz + p.r1};
  const double emin = *std::min_element(e.begin(), e.end());
  const double tol = 1e-9 * std::max({1.0, std::abs(p.jz), p.r1, p.r2});
  ZeroTLimit out;
  out.ground_degeneracy = static_cast<std::size_t>(
      std::count_if(e.begin(), e.end(), [&](double x) { return x - emin <= tol; }));
  // uniform mixture over the ground level
  switch (out.ground_degeneracy) {
    case 1:
      out.value = 1.0;
      break;
    case 3:
      out.value = 1.0 / 3.0;
      break;
    default:
      out.value = 0.0;
      break;
  }

  constexpr double t1 = 1e-4, t2 = 1e-5;
  const CorrelationResult c1 = correlations(gibbs_state(p, t1));
  const CorrelationResult c2 = correlations(gibbs_state(p, t2));
  const std::array<double, 3> v1 = {c1.q.value, c1.u.value, c1.f.value};
  const std::array<double, 3> v2 = {c2.q.value, c2.u.value, c2.f.value};
  for (std::size_t k = 0; k < 3; ++k) {
    out.extrapolated[k] = v2[k] - (v1[k] - v2[k]) * t2 / (t1 - t2);
    if (std::abs(out.extrapolated[k] - out.value) > 1e-3)
      throw ConsistencyError("zero-temperature limit disagrees with low-temperature extrapolation");
  }
  return out;
}

bool classical_state_check(const EffectiveParams& p, double t) {
  constexpr double kZero = 1e-9;
  if (t < 0 || std::isnan(t)) throw DomainError("temperature must be non-negative");
  if (t == 0) return zero_t_limit(p).value < kZero;
  const CorrelationResult c = correlations(gibbs_state(p, t));
  return c.q.value < kZero && c.u.value < kZero && c.f.value < kZero;
}

// ---------------------------------------------------------------------------

namespace {

// Least squares for y = c0 + c1 u + c2 u^2 via normal equations.
std::array<long double, 3> quadratic_fit(const std::vector<long double>& u, const std::vector<long double>& y) {
  long double a[3][4] = {};
  for (std::size_t k = 0; k < u.size(); ++k) {
    const long double basis[3] = {1.0L, u[k], u[k] * u[k]};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] += basis[r] * basis[c];
      a[r][3] += basis[r] * y[k];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    for (int c = 0; c < 4; ++c) std::swap(a[col][c], a[piv][c]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const long double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

double rel_err(double fitted, double analytic) {
  return std::abs(fitted - analytic) / std::max(std::abs(analytic), kAsymptoteFloor);
}

}  // namespace

AsymptoteReport asymptote_check(const EffectiveParams& p, std::span<const double> t_values) {
  if (t_values.size() < 3) throw SpecError("asymptote check needs at least 3 temperatures");
  const double t_floor = 10.0 * std::max({std::abs(p.jz), p.r1, p.r2});
  for (double t : t_values)
    if (!usable_temperature(t) || t < t_floor)
      throw SpecError("asymptote temperatures must be >= 10 max(|jz|, r1, r2)");

  const double t0 = *std::min_element(t_values.begin(), t_values.end());
  std::vector<long double> u(t_values.size());
  std::array<std::vector<long double>, 6> y;
  for (auto& col : y) col.resize(t_values.size());
  for (std::size_t k = 0; k < t_values.size(); ++k) {
    const double t = t_values[k];
    const BellSpectrum pop = gibbs_state(p, t).populations();
    const detail::BranchValues b = detail::branches(pop.p1, pop.p2, pop.p3, pop.p4);
    const std::array<double, 6> vals = {b.q0, b.q1, b.u0, b.u1, b.f0, b.f1};
    u[k] = static_cast<long double>(t0) / t;
    for (std::size_t j = 0; j < 6; ++j) y[j][k] = static_cast<long double>(vals[j]) * t * t;
  }

  const HighTCoefficients hc = high_t_coefficients(p);
  const std::array<AsymptoticCoefficients, 6> analytic = hc.all();
  static const std::array<const char*, 6> names = {"Q0", "Q1", "U0", "U1", "F0", "F1"};

  AsymptoteReport r;
  for (std::size_t j = 0; j < 6; ++j) {
    const auto c = quadratic_fit(u, y[j]);
    BranchFit& f = r.fits[j];
    f.name = names[j];
    f.analytic = analytic[j];
    f.fitted = {static_cast<double>(c[0]), static_cast<double>(c[1] * t0)};
    f.rel_err_c2 = rel_err(f.fitted.c2, f.analytic.c2);
    f.rel_err_c3 = rel_err(f.fitted.c3, f.analytic.c3);
    r.max_rel_err_c2 = std::max(r.max_rel_err_c2, f.rel_err_c2);
    r.max_rel_err_c3 = std::max(r.max_rel_err_c3, f.rel_err_c3);
  }

  const double boundary = branch_boundary(p);
  r.active = boundary < 0 ? Branch::Zero : boundary > 0 ? Branch::One : Branch::Tie;
  const std::size_t off = r.active == Branch::One ? 1 : 0;
  for (std::size_t m = 0; m < 3; ++m) r.active_c2[m] = analytic[2 * m + off].c2;
  return r;
}

}  // namespace spincorr
