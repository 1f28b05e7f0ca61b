#pragma once

#include "fatpoints/interpolation.hpp"
#include "fatpoints/projective.hpp"
#include "fatpoints/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fatpoints {

struct ChudnovskyVerdict {
  unsigned m = 1;
  unsigned alpha_m = 0;
  /// alpha_m / m - (alpha + N - 1) / N
  Rational slack;
  bool holds = false;
};

struct WaldschmidtRow {
  unsigned m = 1;
  unsigned alpha_m = 0;
  Rational ratio;
  bool skoda_ok = true;
  bool ev_ok = true;
  bool certified = true;
};

/// Ratios alpha_m / m are upper bounds for the Waldschmidt constant; the
/// Skoda and Esnault-Viehweg values bound it from below.
struct WaldschmidtReport {
  std::string label;
  std::size_t N = 0;
  std::size_t n = 0;
  unsigned alpha = 0;
  std::vector<WaldschmidtRow> rows;
  Rational upper_bound;
  Rational skoda;
  Rational ev;
  /// The Esnault-Viehweg bound needs N >= 2; on P^1 the constant is exactly n.
  bool ev_applies = true;
  Rational chudnovsky_target;
  /// [max(skoda, ev), upper_bound], ev dropped when it does not apply
  Rational gamma_lower;
  Rational gamma_upper;
  std::vector<ChudnovskyVerdict> verdicts;
  AlphaTable table;

  bool all_certified() const;
};

WaldschmidtReport waldschmidt_report(const PointConfig& cfg, unsigned m_max,
                                     const AlphaOptions& options = {});

std::vector<ChudnovskyVerdict> chudnovsky_check(const PointConfig& cfg, unsigned m_max,
                                                const AlphaOptions& options = {});

/// Verdicts from an already computed table.
std::vector<ChudnovskyVerdict> chudnovsky_verdicts(const AlphaTable& table, std::size_t N);

struct DeltaResult {
  std::optional<unsigned> delta;
  std::optional<unsigned> t0;
  unsigned s_max = 0;
  AlphaTable table;
};

/// delta = least s <= s_max with s * alpha > alpha_s; t0 = (N - 1) * delta.
DeltaResult delta_t0(const PointConfig& cfg, unsigned s_max, const AlphaOptions& options = {});

struct SeshadriBound {
  Rational radicand;
  unsigned root_order = 1;
  unsigned alpha = 0;
  /// The (root_order)-th root of the radicand to 12 significant digits.
  std::string decimal;
  /// Set when the bound is rational (root_order 1 or a perfect power).
  std::optional<Rational> exact;
};

SeshadriBound seshadri_lower_bound(const PointConfig& cfg, const AlphaOptions& options = {});

/// k-th root of a positive rational rendered with `digits` significant
/// digits, rounded half up.
std::string decimal_root(const Rational& value, unsigned k, unsigned digits = 12);

struct ContainmentVerdict {
  unsigned degree = 0;
  std::size_t left_dimension = 0;
  std::size_t right_dimension = 0;
  bool holds = false;
};

/// Degreewise check of I^(Nm) ⊆ M^(m(N-1)) I^m for d in [alpha(I^(Nm)), d_max].
struct HarbourneHunekeReport {
  unsigned m = 1;
  unsigned symbolic_exponent = 0;
  unsigned alpha_symbolic = 0;
  unsigned d_max = 0;
  std::vector<ContainmentVerdict> degrees;
  bool holds_in_all_checked_degrees = true;
};

/// d_max defaults to alpha(I^(Nm)) + N + 1.
HarbourneHunekeReport hh_points_check(const PointConfig& cfg, unsigned m,
                                      std::optional<unsigned> d_max = std::nullopt,
                                      const AlphaOptions& options = {});

struct SemicontinuitySample {
  std::string label;
  std::optional<std::uint64_t> seed;
  PointConfig config;
  unsigned alpha_m = 0;
  bool special = false;
  bool certified = true;
};

struct SemicontinuityReport {
  std::size_t n = 0;
  std::size_t N = 0;
  unsigned m = 1;
  std::vector<SemicontinuitySample> samples;
  unsigned max_alpha = 0;
};

/// alpha_m over seeded samples plus any caller-supplied configurations; the
/// maximum is a lower bound for the generic value.
SemicontinuityReport semicontinuity_experiment(std::size_t n, std::size_t N, unsigned m,
                                               const std::vector<std::uint64_t>& seeds,
                                               unsigned height,
                                               const std::vector<PointConfig>& extra = {},
                                               const AlphaOptions& options = {});

}  // namespace fatpoints
