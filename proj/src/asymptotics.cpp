#include "fatpoints/asymptotics.hpp"

#include "fatpoints/errors.hpp"

#include <algorithm>

namespace fatpoints {

bool WaldschmidtReport::all_certified() const {
  return std::all_of(rows.begin(), rows.end(), [](const WaldschmidtRow& r) { return r.certified; });
}

std::vector<ChudnovskyVerdict> chudnovsky_verdicts(const AlphaTable& table, std::size_t N) {
  const unsigned alpha = table.entries.at(1).alpha;
  Rational target(static_cast<long>(alpha + N - 1), static_cast<long>(N));
  target.canonicalize();
  std::vector<ChudnovskyVerdict> out;
  for (const auto& [m, entry] : table.entries) {
    ChudnovskyVerdict v;
    v.m = m;
    v.alpha_m = entry.alpha;
    v.slack = Rational(entry.alpha, m) - target;
    v.slack.canonicalize();
    v.holds = v.slack >= 0;
    out.push_back(std::move(v));
  }
  return out;
}

WaldschmidtReport waldschmidt_report(const PointConfig& cfg, unsigned m_max,
                                     const AlphaOptions& options) {
  WaldschmidtReport r;
  r.label = cfg.label;
  r.N = cfg.N;
  r.n = cfg.size();
  r.table = alpha_table(cfg, m_max, options);
  r.alpha = r.table.entries.at(1).alpha;
  const long N = static_cast<long>(cfg.N);
  r.skoda = Rational(r.alpha, N);
  r.ev = Rational(r.alpha + 1, N);
  r.chudnovsky_target = Rational(r.alpha + N - 1, N);
  r.skoda.canonicalize();
  r.ev.canonicalize();
  r.ev_applies = cfg.N >= 2;
  r.chudnovsky_target.canonicalize();
  for (const auto& [m, entry] : r.table.entries) {
    WaldschmidtRow row;
    row.m = m;
    row.alpha_m = entry.alpha;
    row.ratio = Rational(entry.alpha, m);
    row.ratio.canonicalize();
    row.skoda_ok = row.ratio >= r.skoda;
    row.ev_ok = !r.ev_applies || row.ratio >= r.ev;
    row.certified = entry.certificate.certified;
    if (r.rows.empty() || row.ratio < r.upper_bound) r.upper_bound = row.ratio;
    r.rows.push_back(std::move(row));
  }
  r.gamma_lower = r.ev_applies ? std::max(r.skoda, r.ev) : r.skoda;
  r.gamma_upper = r.upper_bound;
  r.verdicts = chudnovsky_verdicts(r.table, cfg.N);
  return r;
}

std::vector<ChudnovskyVerdict> chudnovsky_check(const PointConfig& cfg, unsigned m_max,
                                                const AlphaOptions& options) {
  return chudnovsky_verdicts(alpha_table(cfg, m_max, options), cfg.N);
}

DeltaResult delta_t0(const PointConfig& cfg, unsigned s_max, const AlphaOptions& options) {
  DeltaResult out;
  out.s_max = s_max;
  out.table = alpha_table(cfg, s_max, options);
  const unsigned alpha = out.table.entries.at(1).alpha;
  for (const auto& [s, entry] : out.table.entries) {
    if (s * alpha > entry.alpha) {
      out.delta = s;
      out.t0 = static_cast<unsigned>((cfg.N - 1) * s);
      break;
    }
  }
  return out;
}

std::string decimal_root(const Rational& value, unsigned k, unsigned digits) {
  if (value <= 0) throw InvalidArgument("decimal_root needs a positive value");
  if (k < 1 || digits < 1) throw InvalidArgument("decimal_root needs k >= 1 and digits >= 1");

  // floor(value^(1/k) * 10^E) with enough guard digits past the requested ones.
  const unsigned long E = digits + 10 + mpz_sizeinbase(value.get_den_mpz_t(), 10);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, E * k);
  Integer scaled = value.get_num() * scale / value.get_den();
  Integer root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k);

  std::string s = root.get_str();
  long lead = static_cast<long>(s.size()) - 1 - static_cast<long>(E);
  std::string sig = s.substr(0, digits);
  if (s.size() > digits && s[digits] >= '5') {
    Integer bumped(sig);
    ++bumped;
    sig = bumped.get_str();
    if (sig.size() > digits) {
      sig.pop_back();
      ++lead;
    }
  }
  while (sig.size() < digits) sig.push_back('0');

  std::string out;
  if (lead >= 0) {
    const std::size_t int_digits = static_cast<std::size_t>(lead) + 1;
    if (int_digits >= digits) {
      out = sig + std::string(int_digits - digits, '0');
    } else {
      out = sig.substr(0, int_digits) + "." + sig.substr(int_digits);
    }
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-lead - 1), '0') + sig;
  }
  return out;
}

SeshadriBound seshadri_lower_bound(const PointConfig& cfg, const AlphaOptions& options) {
  require_valid(cfg);
  if (cfg.N < 2) throw InvalidArgument("the Seshadri lower bound needs N >= 2");
  SeshadriBound b;
  b.alpha = alpha_symbolic(cfg, 1, options).alpha;
  b.root_order = static_cast<unsigned>(cfg.N - 1);
  b.radicand = Rational(static_cast<long>(b.alpha + cfg.N - 1), static_cast<long>(cfg.size() * cfg.N));
  b.radicand.canonicalize();
  b.decimal = decimal_root(b.radicand, b.root_order);
  Integer num_root, den_root;
  const bool num_exact = mpz_root(num_root.get_mpz_t(), b.radicand.get_num_mpz_t(), b.root_order) != 0;
  const bool den_exact = mpz_root(den_root.get_mpz_t(), b.radicand.get_den_mpz_t(), b.root_order) != 0;
  if (num_exact && den_exact) b.exact = Rational(num_root, den_root);
  return b;
}

HarbourneHunekeReport hh_points_check(const PointConfig& cfg, unsigned m,
                                      std::optional<unsigned> d_max, const AlphaOptions& options) {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  require_valid(cfg);
  HarbourneHunekeReport r;
  r.m = m;
  r.symbolic_exponent = static_cast<unsigned>(cfg.N * m);
  r.alpha_symbolic = alpha_symbolic(cfg, r.symbolic_exponent, options).alpha;
  r.d_max = d_max.value_or(r.alpha_symbolic + static_cast<unsigned>(cfg.N) + 1);
  if (r.d_max < r.alpha_symbolic) return r;

  const IdealGenerators I = minimal_generators_up_to(cfg, r.d_max);
  const IdealGenerators M = irrelevant_ideal(cfg.N + 1, r.d_max);
  std::vector<IdealFactor> factors;
  const unsigned m_power = static_cast<unsigned>(m * (cfg.N - 1));
  if (m_power > 0) factors.push_back({&M, m_power});
  factors.push_back({&I, m});

  for (unsigned d = r.alpha_symbolic; d <= r.d_max; ++d) {
    const GradedBasis left = graded_piece(cfg, r.symbolic_exponent, d, options.mode);
    const GradedBasis right = product_piece(factors, d);
    const std::size_t dim = MonomialBasis(cfg.N + 1, d).size();
    ContainmentVerdict v;
    v.degree = d;
    v.left_dimension = left.dimension();
    v.right_dimension = right.dimension();
    v.holds = span_contains(right.forms, left.forms, dim);
    r.holds_in_all_checked_degrees = r.holds_in_all_checked_degrees && v.holds;
    r.degrees.push_back(v);
  }
  return r;
}

SemicontinuityReport semicontinuity_experiment(std::size_t n, std::size_t N, unsigned m,
                                               const std::vector<std::uint64_t>& seeds,
                                               unsigned height,
                                               const std::vector<PointConfig>& extra,
                                               const AlphaOptions& options) {
  if (seeds.empty() && extra.empty()) throw InvalidArgument("semicontinuity needs samples");
  SemicontinuityReport r;
  r.n = n;
  r.N = N;
  r.m = m;
  for (auto seed : seeds) {
    SemicontinuitySample s;
    s.seed = seed;
    s.config = sample_config(n, N, seed, height);
    s.label = s.config.label;
    r.samples.push_back(std::move(s));
  }
  for (const auto& cfg : extra) {
    if (cfg.N != N || cfg.size() != n) {
      throw InvalidArgument("extra configuration '" + cfg.label + "' does not have n = " +
                            std::to_string(n) + " points in P^" + std::to_string(N));
    }
    SemicontinuitySample s;
    s.config = cfg;
    s.label = cfg.label;
    r.samples.push_back(std::move(s));
  }
  for (auto& s : r.samples) {
    const auto a = alpha_symbolic(s.config, m, options);
    s.alpha_m = a.alpha;
    s.certified = a.certificate.certified;
    r.max_alpha = std::max(r.max_alpha, s.alpha_m);
  }
  for (auto& s : r.samples) s.special = s.alpha_m < r.max_alpha;
  return r;
}

}  // namespace fatpoints
