#pragma once

// Sweeps over temperature or a coupling, classification of temperature
// curves into behavior types I-IV, detection of sudden changes where the
// active branch switches, zero-temperature limits and high-temperature
// asymptote checks.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spincorr/correlations.hpp"
#include "spincorr/model.hpp"

namespace spincorr {

enum class Axis { T, R1, R2, Jz };
enum class Spacing { Linear, Log };
enum class Measure { Q, U, F };

constexpr std::array<Measure, 3> kAllMeasures = {Measure::Q, Measure::U, Measure::F};

const char* to_string(Axis a);
const char* to_string(Measure m);
std::optional<Axis> parse_axis(std::string_view s);

struct SweepSpec {
  /// Raw couplings are reduced to (Jz, r1, r2); they can only be swept along
  /// T or Jz.
  std::variant<EffectiveParams, Couplings> fixed = EffectiveParams{};
  Axis axis = Axis::T;
  double min = 1e-2;
  double max = 10.0;
  int steps = 500;
  Spacing spacing = Spacing::Linear;
  /// Temperature for the coupling axes; ignored on the T axis.
  double t = 1.0;
  /// Measures considered by classification and sudden-change detection.
  std::vector<Measure> measures{kAllMeasures.begin(), kAllMeasures.end()};
};

/// Throws SpecError if the spec violates its invariants.
void validate(const SweepSpec& spec);

/// Grid along the swept axis.
std::vector<double> axis_values(const SweepSpec& spec);

/// Default temperature grid: 500 log-spaced points in [1e-2, 10 max(1, |Jz|, r1, r2)].
SweepSpec default_temperature_sweep(const EffectiveParams& p);

struct SweepRow {
  double x = 0;  // axis value
  EffectiveParams params;
  double t = 0;
  BranchPair q, u, f;

  const BranchPair& measure(Measure m) const;
};

struct MeasureTriple {
  BranchPair q, u, f;
};

/// Closed-form measures at arbitrary (params, T) points through the batch
/// kernel, in parallel. Throws DomainError unless every T is positive.
std::vector<MeasureTriple> evaluate_points(std::span<const EffectiveParams> params, std::span<const double> t);

/// One row per grid point, ordered by axis value. Rows are computed in
/// parallel with the batch kernel; the result does not depend on the number
/// of threads.
std::vector<SweepRow> sweep(const SweepSpec& spec);

// ---------------------------------------------------------------------------
// behavior types

enum class BehaviorKind { I, II, III, IV };

const char* to_string(BehaviorKind k);

struct Extremum {
  double t = 0;
  double value = 0;
  bool is_max = false;
};

struct BehaviorType {
  BehaviorKind kind = BehaviorKind::I;
  std::vector<Extremum> extrema;  // interior, in T order
};

constexpr double kDefaultEps0 = 1e-6;

/// Start-value tolerance for the "starts at 1" and "starts at 1/3" tests.
constexpr double kStartTol = 1e-3;

/// Interior extrema are turning points of the curve that stand out from the
/// running extreme by more than eps0. Throws ClassificationError if there
/// are fewer than 50 points, the T grid is not increasing or starts above
/// 1e-2, or no type fits.
BehaviorType classify_behavior(std::span<const double> t, std::span<const double> value, double eps0 = kDefaultEps0);

struct BehaviorReport {
  std::array<std::optional<BehaviorType>, 3> per_measure;  // Q, U, F
  std::array<std::string, 3> errors;                       // set when unclassified
  std::optional<BehaviorKind> consensus;                   // all classified measures agree
  bool agree = false;
};

/// Classifies each requested measure of a T sweep.
BehaviorReport classify_sweep(const std::vector<SweepRow>& rows, std::span<const Measure> measures = kAllMeasures,
                              double eps0 = kDefaultEps0);

// ---------------------------------------------------------------------------
// sudden changes

enum class ChangeKind { Cusp, Kink };

const char* to_string(ChangeKind k);

struct SuddenChange {
  Measure measure = Measure::Q;
  double location = 0;
  double jump = 0;  // right slope minus left slope
  ChangeKind kind = ChangeKind::Kink;
  /// Nearest solution of r1 + r2 = 2|Jz| along the axis (NaN if none).
  double analytic = 0;
  bool matches_analytic = false;  // within one grid step
};

/// Points strictly inside the axis range where r1 + r2 - 2|Jz| changes sign.
std::vector<double> analytic_crossings(const SweepSpec& spec);

/// Axis must be r1, r2 or Jz. Events are ordered by measure, then location.
std::vector<SuddenChange> detect_sudden_changes(const SweepSpec& spec);

// ---------------------------------------------------------------------------
// T -> 0

struct ZeroTLimit {
  double value = 0;                   // 0, 1/3 or 1; same for Q, U and F
  std::size_t ground_degeneracy = 0;  // number of Bell states in the ground level
  std::array<double, 3> extrapolated{};  // Q, U, F from T = 1e-4, 1e-5
};

/// Throws ConsistencyError if the extrapolated values differ from the
/// analytic one by more than 1e-3.
ZeroTLimit zero_t_limit(const EffectiveParams& p);

/// All three measures below 1e-9. t = 0 uses zero_t_limit; t < 0 throws
/// DomainError.
bool classical_state_check(const EffectiveParams& p, double t);

// ---------------------------------------------------------------------------
// high T

struct BranchFit {
  std::string name;  // "Q0", ..., "F1"
  AsymptoticCoefficients analytic;
  AsymptoticCoefficients fitted;
  double rel_err_c2 = 0;
  double rel_err_c3 = 0;
};

struct AsymptoteReport {
  std::array<BranchFit, 6> fits;  // Q0, Q1, U0, U1, F0, F1
  Branch active = Branch::Tie;    // same for all measures
  std::array<double, 3> active_c2{};  // Q, U, F
  double max_rel_err_c2 = 0;
  double max_rel_err_c3 = 0;
};

/// Relative errors use max(|analytic|, 1e-6) as the denominator.
constexpr double kAsymptoteFloor = 1e-6;

/// Fits T^2 m(T) = c2 + c3/T + c4/T^2 per branch. Throws SpecError unless
/// there are at least 3 finite temperatures, each >= 10 max(|Jz|, r1, r2)
/// and > 0.
AsymptoteReport asymptote_check(const EffectiveParams& p, std::span<const double> t_values);

}  // namespace spincorr
