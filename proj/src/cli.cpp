#include "spincorr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <unistd.h>
#include <vector>

#include "spincorr/analysis.hpp"
#include "spincorr/correlations.hpp"
#include "spincorr/error.hpp"
#include "spincorr/kernels.hpp"
#include "spincorr/model.hpp"
#include "spincorr/verify.hpp"

namespace spincorr::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// ---------------------------------------------------------------------------
// shared options

struct ParamOptions {
  bool effective = false;
  double jx = 0, jy = 0, jz = 0, dz = 0, gz = 0, r1 = 0, r2 = 0;
  std::vector<CLI::Option*> raw_only, effective_only;
};

void add_params(CLI::App* sub, ParamOptions& p) {
  sub->add_flag("--effective", p.effective, "Parameterize by (jz, r1, r2) instead of raw couplings");
  sub->add_option("--jz", p.jz, "Jz coupling");
  p.raw_only.push_back(sub->add_option("--jx", p.jx, "Jx coupling"));
  p.raw_only.push_back(sub->add_option("--jy", p.jy, "Jy coupling"));
  p.raw_only.push_back(sub->add_option("--dz", p.dz, "DM coupling Dz"));
  p.raw_only.push_back(sub->add_option("--gz", p.gz, "KSEA coupling Gamma_z"));
  p.effective_only.push_back(sub->add_option("--r1", p.r1, "r1 = sqrt((Jx-Jy)^2 + 4 Gz^2)"));
  p.effective_only.push_back(sub->add_option("--r2", p.r2, "r2 = sqrt((Jx+Jy)^2 + 4 Dz^2)"));
}

struct Resolved {
  std::variant<EffectiveParams, Couplings> fixed;
  EffectiveParams eff;
};

Resolved resolve(const ParamOptions& p) {
  if (p.effective) {
    for (const CLI::Option* o : p.raw_only)
      if (o->count() > 0) throw UsageError(o->get_name() + " is a raw coupling; drop it or drop --effective");
    if (p.r1 < 0 || p.r2 < 0) throw UsageError("r1 and r2 must be non-negative");
    const EffectiveParams e{p.jz, p.r1, p.r2};
    return {e, e};
  }
  for (const CLI::Option* o : p.effective_only)
    if (o->count() > 0) throw UsageError(o->get_name() + " needs --effective");
  const Couplings c{p.jx, p.jy, p.jz, p.dz, p.gz};
  return {c, effective_params(c)};
}

json params_json(const Resolved& r) {
  json j;
  if (const auto* c = std::get_if<Couplings>(&r.fixed)) {
    j["parameterization"] = "raw";
    j["jx"] = c->jx;
    j["jy"] = c->jy;
    j["jz"] = c->jz;
    j["dz"] = c->dz;
    j["gz"] = c->gz;
  } else {
    j["parameterization"] = "effective";
  }
  j["effective"] = {{"jz", r.eff.jz}, {"r1", r.eff.r1}, {"r2", r.eff.r2}};
  return j;
}

std::string params_comment(const Resolved& r) {
  std::string s;
  if (const auto* c = std::get_if<Couplings>(&r.fixed))
    s += "# parameterization=raw jx=" + num(c->jx) + " jy=" + num(c->jy) + " jz=" + num(c->jz) + " dz=" + num(c->dz) +
         " gz=" + num(c->gz) + "\n";
  else
    s += "# parameterization=effective\n";
  s += "# effective jz=" + num(r.eff.jz) + " r1=" + num(r.eff.r1) + " r2=" + num(r.eff.r2) + "\n";
  return s;
}

struct OutputOptions {
  std::string format = "csv";
  std::string path;
};

void add_output(CLI::App* sub, OutputOptions& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", o.path, "Write to this file instead of stdout");
}

void emit(const OutputOptions& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(o.path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << text;
    f.close();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into place: " + ec.message());
  }
}

// ---------------------------------------------------------------------------
// commands

struct CurveOptions {
  ParamOptions params;
  OutputOptions output;
  double tmin = 1e-2;
  double tmax = 0;  // 0: default from parameters
  int steps = 500;
  std::string spacing = "log";
};

std::string behavior_text(const std::optional<BehaviorType>& b, const std::string& error) {
  if (!b) return "unclassified (" + error + ")";
  std::string s = to_string(b->kind);
  for (const Extremum& e : b->extrema)
    s += std::string(" ") + (e.is_max ? "max" : "min") + "(T=" + num(e.t) + ",value=" + num(e.value) + ")";
  return s;
}

int cmd_curve(const CurveOptions& o, std::ostream& out) {
  const Resolved r = resolve(o.params);
  if (!(o.tmin > 0) || (o.tmax != 0 && !(o.tmax > 0))) throw UsageError("temperatures must be positive");
  SweepSpec spec = default_temperature_sweep(r.eff);
  spec.fixed = r.fixed;
  spec.min = o.tmin;
  if (o.tmax != 0) spec.max = o.tmax;
  spec.steps = o.steps;
  spec.spacing = o.spacing == "linear" ? Spacing::Linear : Spacing::Log;
  const std::vector<SweepRow> rows = sweep(spec);
  const BehaviorReport behavior = classify_sweep(rows);

  std::string text;
  if (o.output.format == "csv") {
    text = "T,Q,U,F,Q_branch,U_branch,F_branch\n";
    for (const SweepRow& row : rows)
      text += num(row.t) + "," + num(row.q.value) + "," + num(row.u.value) + "," + num(row.f.value) + "," +
              to_string(row.q.active) + "," + to_string(row.u.active) + "," + to_string(row.f.active) + "\n";
    text += params_comment(r);
    for (Measure m : kAllMeasures) {
      const auto k = static_cast<std::size_t>(m);
      text += std::string("# behavior ") + to_string(m) + "=" +
              behavior_text(behavior.per_measure[k], behavior.errors[k]) + "\n";
    }
    text += std::string("# consensus=") + (behavior.consensus ? to_string(*behavior.consensus) : "none") + "\n";
  } else {
    json j;
    j["command"] = "curve";
    j["parameters"] = params_json(r);
    json rows_j = json::array();
    for (const SweepRow& row : rows)
      rows_j.push_back({{"T", row.t},
                        {"Q", row.q.value},
                        {"U", row.u.value},
                        {"F", row.f.value},
                        {"Q_branch", to_string(row.q.active)},
                        {"U_branch", to_string(row.u.active)},
                        {"F_branch", to_string(row.f.active)}});
    j["rows"] = rows_j;
    json b;
    for (Measure m : kAllMeasures) {
      const auto k = static_cast<std::size_t>(m);
      const auto& bt = behavior.per_measure[k];
      if (!bt) {
        b[to_string(m)] = {{"type", nullptr}, {"error", behavior.errors[k]}};
        continue;
      }
      json ex = json::array();
      for (const Extremum& e : bt->extrema) ex.push_back({{"T", e.t}, {"value", e.value}, {"kind", e.is_max ? "max" : "min"}});
      b[to_string(m)] = {{"type", to_string(bt->kind)}, {"extrema", ex}};
    }
    j["behavior"] = b;
    j["consensus"] = behavior.consensus ? json(to_string(*behavior.consensus)) : json(nullptr);
    text = j.dump(2) + "\n";
  }
  emit(o.output, text, out);
  return kOk;
}

struct PhaseOptions {
  double jz = 0;
  OutputOptions output;
  double t = 1.0;
  bool t0 = false;
  double r1_min = 0, r1_max = 5, r2_min = 0, r2_max = 5;
  long long r1_steps = 101, r2_steps = 101;
};

int cmd_phase(const PhaseOptions& o, CLI::Option* t_opt, std::ostream& out) {
  if (o.t0 && t_opt->count() > 0) throw UsageError("--t and --t0 are mutually exclusive");
  if (!o.t0 && !(o.t > 0 && std::isfinite(o.t))) throw UsageError("temperature must be positive");
  if (o.r1_steps < 2 || o.r2_steps < 2) throw UsageError("grids need at least 2 steps per axis");
  if (o.r1_steps > 10'000'000 / o.r2_steps) throw UsageError("grid larger than 1e7 points");
  if (!(o.r1_min < o.r1_max) || !(o.r2_min < o.r2_max) || o.r1_min < 0 || o.r2_min < 0)
    throw UsageError("r ranges need 0 <= min < max");

  const auto lin = [](double a, double b, long long n, long long i) {
    return i == n - 1 ? b : a + (b - a) * (static_cast<double>(i) / static_cast<double>(n - 1));
  };
  const std::size_t n = static_cast<std::size_t>(o.r1_steps * o.r2_steps);
  std::vector<EffectiveParams> ps(n);
  for (long long i = 0; i < o.r1_steps; ++i)
    for (long long j = 0; j < o.r2_steps; ++j)
      ps[static_cast<std::size_t>(i * o.r2_steps + j)] = {o.jz, lin(o.r1_min, o.r1_max, o.r1_steps, i),
                                                          lin(o.r2_min, o.r2_max, o.r2_steps, j)};

  std::vector<std::array<double, 3>> values(n);
  if (o.t0) {
    for (std::size_t k = 0; k < n; ++k) {
      const double v = zero_t_limit(ps[k]).value;
      values[k] = {v, v, v};
    }
  } else {
    const std::vector<double> ts(n, o.t);
    const std::vector<MeasureTriple> m = evaluate_points(ps, ts);
    for (std::size_t k = 0; k < n; ++k) values[k] = {m[k].q.value, m[k].u.value, m[k].f.value};
  }

  const auto region = [](const EffectiveParams& p) {
    const double b = branch_boundary(p);
    const double tol = 1e-9 * std::max({1.0, std::abs(p.jz), p.r1, p.r2});
    return std::abs(b) <= tol ? "boundary" : b < 0 ? "Omega0" : "Omega1";
  };

  std::string text;
  if (o.output.format == "csv") {
    text = "r1,r2,region,Q,U,F\n";
    for (std::size_t k = 0; k < n; ++k)
      text += num(ps[k].r1) + "," + num(ps[k].r2) + "," + region(ps[k]) + "," + num(values[k][0]) + "," +
              num(values[k][1]) + "," + num(values[k][2]) + "\n";
    text += "# jz=" + num(o.jz) + (o.t0 ? std::string(" T=0 (limit)") : " T=" + num(o.t)) + "\n";
  } else {
    json j;
    j["command"] = "phase";
    j["jz"] = o.jz;
    j["T"] = o.t0 ? json(0.0) : json(o.t);
    j["limit"] = o.t0;
    json cells = json::array();
    for (std::size_t k = 0; k < n; ++k)
      cells.push_back({{"r1", ps[k].r1},
                       {"r2", ps[k].r2},
                       {"region", region(ps[k])},
                       {"Q", values[k][0]},
                       {"U", values[k][1]},
                       {"F", values[k][2]}});
    j["cells"] = cells;
    text = j.dump(2) + "\n";
  }
  emit(o.output, text, out);
  return kOk;
}

struct SuddenOptions {
  ParamOptions params;
  OutputOptions output;
  std::string axis = "r1";
  double min = 0, max = 4;
  int steps = 4001;
  double t = 1.0;
};

int cmd_sudden(const SuddenOptions& o, std::ostream& out) {
  const auto axis = parse_axis(o.axis);
  if (!axis || *axis == Axis::T) throw UsageError("--axis must be r1, r2 or jz");
  const Resolved r = resolve(o.params);
  SweepSpec spec;
  spec.fixed = r.fixed;
  spec.axis = *axis;
  spec.min = o.min;
  spec.max = o.max;
  spec.steps = o.steps;
  spec.t = o.t;
  spec.spacing = Spacing::Linear;
  const std::vector<SuddenChange> events = detect_sudden_changes(spec);
  const std::vector<double> predicted = analytic_crossings(spec);

  std::string text;
  if (o.output.format == "csv") {
    text = "measure,location,jump,kind,analytic,matches_analytic\n";
    for (const SuddenChange& e : events)
      text += std::string(to_string(e.measure)) + "," + num(e.location) + "," + num(e.jump) + "," + to_string(e.kind) +
              "," + num(e.analytic) + "," + (e.matches_analytic ? "true" : "false") + "\n";
    text += params_comment(r);
    text += std::string("# axis=") + to_string(*axis) + " T=" + num(o.t) + "\n# predicted r1+r2=2|jz| at:";
    for (double x : predicted) text += " " + num(x);
    text += "\n";
  } else {
    json j;
    j["command"] = "sudden";
    j["parameters"] = params_json(r);
    j["axis"] = to_string(*axis);
    j["T"] = o.t;
    json ev = json::array();
    for (const SuddenChange& e : events)
      ev.push_back({{"measure", to_string(e.measure)},
                    {"location", e.location},
                    {"jump", e.jump},
                    {"kind", to_string(e.kind)},
                    {"analytic", jnum(e.analytic)},
                    {"matches_analytic", e.matches_analytic}});
    j["events"] = ev;
    j["predicted"] = predicted;
    text = j.dump(2) + "\n";
  }
  emit(o.output, text, out);
  return kOk;
}

struct VerifyCliOptions {
  OutputOptions output;
  VerifyOptions v;
};

int cmd_verify(const VerifyCliOptions& o, std::ostream& out) {
  if (o.v.samples < 1) throw UsageError("--samples must be positive");
  const VerifyReport rep = run_verification(o.v);
  constexpr std::size_t kMaxListed = 20;
  std::string text;
  if (o.output.format == "csv") {
    text = "suite,points,max_dev_Q,max_dev_U,max_dev_F\n";
    for (const SuiteResult& s : rep.suites)
      text += s.name + "," + std::to_string(s.points) + "," + num(s.max_dev_q) + "," + num(s.max_dev_u) + "," +
              num(s.max_dev_f) + "\n";
    text += "# seed=" + std::to_string(o.v.seed) + " samples=" + std::to_string(o.v.samples) + " tol_q=" +
            num(o.v.tol_q) + " tol_u=" + num(o.v.tol_u) + " tol_f=" + num(o.v.tol_f) + "\n";
    for (std::size_t i = 0; i < rep.violations.size() && i < kMaxListed; ++i) {
      const Violation& v = rep.violations[i];
      text += "# VIOLATION suite=" + v.suite + " measure=" + v.measure + " jz=" + num(v.params.jz) +
              " r1=" + num(v.params.r1) + " r2=" + num(v.params.r2) + " T=" + num(v.t) +
              " deviation=" + num(v.deviation) + " tolerance=" + num(v.tolerance) + "\n";
    }
    if (rep.violations.size() > kMaxListed)
      text += "# ... " + std::to_string(rep.violations.size() - kMaxListed) + " more violations\n";
    text += std::string("# result=") + (rep.ok() ? "PASS" : "FAIL") + "\n";
  } else {
    json j;
    j["command"] = "verify";
    j["seed"] = o.v.seed;
    j["samples"] = o.v.samples;
    json suites = json::array();
    for (const SuiteResult& s : rep.suites)
      suites.push_back({{"suite", s.name},
                        {"points", s.points},
                        {"max_dev_Q", jnum(s.max_dev_q)},
                        {"max_dev_U", jnum(s.max_dev_u)},
                        {"max_dev_F", jnum(s.max_dev_f)}});
    j["suites"] = suites;
    json viol = json::array();
    for (const Violation& v : rep.violations)
      viol.push_back({{"suite", v.suite},
                      {"measure", v.measure},
                      {"jz", v.params.jz},
                      {"r1", v.params.r1},
                      {"r2", v.params.r2},
                      {"T", v.t},
                      {"deviation", jnum(v.deviation)},
                      {"tolerance", v.tolerance}});
    j["violations"] = viol;
    j["pass"] = rep.ok();
    text = j.dump(2) + "\n";
  }
  emit(o.output, text, out);
  return rep.ok() ? kOk : kFailure;
}

struct AsymptoteOptions {
  ParamOptions params;
  OutputOptions output;
  std::vector<double> temps{50, 100, 200};
};

int cmd_asymptote(const AsymptoteOptions& o, std::ostream& out) {
  const Resolved r = resolve(o.params);
  const AsymptoteReport rep = asymptote_check(r.eff, o.temps);
  constexpr double kMaxC2Err = 0.02;
  const bool pass = rep.max_rel_err_c2 <= kMaxC2Err;

  std::string text;
  if (o.output.format == "csv") {
    text = "branch,c2_analytic,c2_fit,c2_rel_err,c3_analytic,c3_fit,c3_rel_err\n";
    for (const BranchFit& f : rep.fits)
      text += f.name + "," + num(f.analytic.c2) + "," + num(f.fitted.c2) + "," + num(f.rel_err_c2) + "," +
              num(f.analytic.c3) + "," + num(f.fitted.c3) + "," + num(f.rel_err_c3) + "\n";
    text += params_comment(r);
    text += std::string("# active_branch=") + to_string(rep.active) + " c2_Q=" + num(rep.active_c2[0]) +
            " c2_U=" + num(rep.active_c2[1]) + " c2_F=" + num(rep.active_c2[2]) + "\n";
    text += std::string("# result=") + (pass ? "PASS" : "FAIL") + "\n";
  } else {
    json j;
    j["command"] = "asymptote";
    j["parameters"] = params_json(r);
    j["temperatures"] = o.temps;
    json fits = json::array();
    for (const BranchFit& f : rep.fits)
      fits.push_back({{"branch", f.name},
                      {"c2_analytic", f.analytic.c2},
                      {"c2_fit", f.fitted.c2},
                      {"c2_rel_err", f.rel_err_c2},
                      {"c3_analytic", f.analytic.c3},
                      {"c3_fit", f.fitted.c3},
                      {"c3_rel_err", f.rel_err_c3}});
    j["fits"] = fits;
    j["active_branch"] = to_string(rep.active);
    j["active_c2"] = {{"Q", rep.active_c2[0]}, {"U", rep.active_c2[1]}, {"F", rep.active_c2[2]}};
    j["pass"] = pass;
    text = j.dump(2) + "\n";
  }
  emit(o.output, text, out);
  return pass ? kOk : kFailure;
}

struct ZeroTOptions {
  ParamOptions params;
  OutputOptions output;
};

int cmd_zerot(const ZeroTOptions& o, std::ostream& out) {
  const Resolved r = resolve(o.params);
  const ZeroTLimit z = zero_t_limit(r.eff);
  std::string text;
  if (o.output.format == "csv") {
    text = "value,ground_degeneracy,Q_extrapolated,U_extrapolated,F_extrapolated\n";
    text += num(z.value) + "," + std::to_string(z.ground_degeneracy) + "," + num(z.extrapolated[0]) + "," +
            num(z.extrapolated[1]) + "," + num(z.extrapolated[2]) + "\n";
    text += params_comment(r);
  } else {
    json j;
    j["command"] = "zerot";
    j["parameters"] = params_json(r);
    j["value"] = z.value;
    j["ground_degeneracy"] = z.ground_degeneracy;
    j["extrapolated"] = {{"Q", z.extrapolated[0]}, {"U", z.extrapolated[1]}, {"F", z.extrapolated[2]}};
    text = j.dump(2) + "\n";
  }
  emit(o.output, text, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum correlations of the thermal two-qubit Heisenberg XYZ model with DM and KSEA couplings",
               "spincorr"};
  app.require_subcommand(1);

  CurveOptions curve;
  CLI::App* c = app.add_subcommand("curve", "Q, U, F against temperature, with behavior classification");
  add_params(c, curve.params);
  add_output(c, curve.output);
  c->add_option("--tmin", curve.tmin, "Lowest temperature")->capture_default_str();
  c->add_option("--tmax", curve.tmax, "Highest temperature (default 10 max(1, |jz|, r1, r2))");
  c->add_option("--steps", curve.steps, "Number of temperatures")->capture_default_str();
  c->add_option("--spacing", curve.spacing, "Grid spacing")->check(CLI::IsMember({"log", "linear"}))->capture_default_str();

  PhaseOptions phase;
  CLI::App* p = app.add_subcommand("phase", "Branch regions and measures over an (r1, r2) grid");
  p->add_option("--jz", phase.jz, "Jz coupling");
  add_output(p, phase.output);
  CLI::Option* t_opt = p->add_option("--t", phase.t, "Temperature")->capture_default_str();
  p->add_flag("--t0", phase.t0, "Zero-temperature limit values");
  p->add_option("--r1-min", phase.r1_min)->capture_default_str();
  p->add_option("--r1-max", phase.r1_max)->capture_default_str();
  p->add_option("--r2-min", phase.r2_min)->capture_default_str();
  p->add_option("--r2-max", phase.r2_max)->capture_default_str();
  p->add_option("--r1-steps", phase.r1_steps)->capture_default_str();
  p->add_option("--r2-steps", phase.r2_steps)->capture_default_str();

  SuddenOptions sudden;
  CLI::App* s = app.add_subcommand("sudden", "Derivative jumps where the active branch switches");
  add_params(s, sudden.params);
  add_output(s, sudden.output);
  s->add_option("--axis", sudden.axis, "Swept parameter: r1, r2 or jz")->capture_default_str();
  s->add_option("--min", sudden.min, "Axis start")->capture_default_str();
  s->add_option("--max", sudden.max, "Axis end")->capture_default_str();
  s->add_option("--steps", sudden.steps, "Grid points")->capture_default_str();
  s->add_option("--t", sudden.t, "Temperature")->capture_default_str();

  VerifyCliOptions verify;
  CLI::App* v = app.add_subcommand("verify", "Compare closed forms with brute-force oracles");
  add_output(v, verify.output);
  v->add_option("--samples", verify.v.samples, "Random parameter points")->capture_default_str();
  v->add_option("--seed", verify.v.seed, "RNG seed")->capture_default_str();
  v->add_option("--tol-q", verify.v.tol_q, "Discord tolerance")->capture_default_str();
  v->add_option("--tol-u", verify.v.tol_u, "LQU tolerance")->capture_default_str();
  v->add_option("--tol-f", verify.v.tol_f, "LQFI tolerance")->capture_default_str();

  AsymptoteOptions asym;
  CLI::App* a = app.add_subcommand("asymptote", "Check the high-temperature 1/T^2 law");
  add_params(a, asym.params);
  add_output(a, asym.output);
  a->add_option("--temps", asym.temps, "Temperatures (comma separated)")->delimiter(',')->capture_default_str();

  ZeroTOptions zt;
  CLI::App* z = app.add_subcommand("zerot", "Zero-temperature limit of the measures");
  add_params(z, zt.params);
  add_output(z, zt.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c->parsed()) return cmd_curve(curve, out);
    if (p->parsed()) return cmd_phase(phase, t_opt, out);
    if (s->parsed()) return cmd_sudden(sudden, out);
    if (v->parsed()) return cmd_verify(verify, out);
    if (a->parsed()) return cmd_asymptote(asym, out);
    if (z->parsed()) return cmd_zerot(zt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace spincorr::cli
