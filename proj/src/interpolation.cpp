#include "fatpoints/interpolation.hpp"

#include "fatpoints/errors.hpp"

#include <algorithm>
#include <limits>

namespace fatpoints {

std::string_view to_string(ConditionsMode mode) {
  return mode == ConditionsMode::affine ? "affine" : "homogeneous";
}

ConditionsMode parse_conditions_mode(std::string_view text) {
  if (text == "affine") return ConditionsMode::affine;
  if (text == "homogeneous") return ConditionsMode::homogeneous;
  throw InvalidArgument("unknown conditions mode '" + std::string(text) + "'");
}

namespace {

/// powers[k][e] = coords[k]^e for e <= top.
std::vector<std::vector<Integer>> coordinate_powers(const ProjectivePoint& p, unsigned top) {
  std::vector<std::vector<Integer>> powers(p.coords().size());
  for (std::size_t k = 0; k < powers.size(); ++k) {
    powers[k].resize(top + 1);
    powers[k][0] = 1;
    for (unsigned e = 1; e <= top; ++e) powers[k][e] = powers[k][e - 1] * p[k];
  }
  return powers;
}

/// binom[a][b] for a <= top.
std::vector<std::vector<Integer>> binomial_table(unsigned top) {
  std::vector<std::vector<Integer>> table(top + 1);
  for (unsigned a = 0; a <= top; ++a) {
    table[a].resize(a + 1);
    table[a][0] = table[a][a] = 1;
    for (unsigned b = 1; b < a; ++b) table[a][b] = table[a - 1][b - 1] + table[a - 1][b];
  }
  return table;
}

}  // namespace

ConditionsMatrix conditions_matrix(const PointConfig& cfg, unsigned m, unsigned t,
                                   ConditionsMode mode) {
  if (m < 1) throw InvalidArgument("multiplicity must be >= 1");
  require_valid(cfg);
  const std::size_t N = cfg.N;

  ConditionsMatrix out;
  out.m = m;
  out.t = t;
  out.mode = mode;
  out.column_index = deglex_monomials(N + 1, t);
  const std::size_t cols = out.column_index.size();
  const auto derivatives =
      deglex_monomials_up_to(mode == ConditionsMode::homogeneous ? N + 1 : N, m - 1);
  const auto binom = binomial_table(t);

  std::vector<Rational> entries;
  entries.reserve(cfg.size() * derivatives.size() * cols);
  Integer v;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const auto& p = cfg.points[i];
    const auto powers = coordinate_powers(p, t);
    const std::size_t chart = p.chart();
    for (const auto& beta : derivatives) {
      out.row_index.push_back({i, beta});
      for (const auto& alpha : out.column_index) {
        v = 1;
        if (mode == ConditionsMode::homogeneous) {
          for (std::size_t k = 0; k <= N && v != 0; ++k) {
            if (beta[k] > alpha[k]) {
              v = 0;
            } else {
              v *= binom[alpha[k]][beta[k]] * powers[k][alpha[k] - beta[k]];
            }
          }
        } else {
          // Affine variables are the coordinates other than the chart one.
          std::size_t b = 0;
          for (std::size_t k = 0; k <= N && v != 0; ++k) {
            if (k == chart) {
              v *= powers[k][alpha[k]];
              continue;
            }
            if (beta[b] > alpha[k]) {
              v = 0;
            } else {
              v *= binom[alpha[k]][beta[b]] * powers[k][alpha[k] - beta[b]];
            }
            ++b;
          }
        }
        entries.emplace_back(v);
      }
    }
  }
  out.matrix = ExactMatrix(out.row_index.size(), cols, std::move(entries));
  return out;
}

unsigned pigeonhole_degree(std::size_t n, std::size_t N, unsigned m) {
  const Integer rows = Integer(static_cast<unsigned long>(n)) * binomial(m + N, m - 1);
  unsigned t = 0;
  while (binomial(t + N, N) <= rows) ++t;
  return t;
}

namespace {

class AlphaSearch {
 public:
  AlphaSearch(const PointConfig& cfg, unsigned m, const AlphaOptions& options)
      : cfg_(cfg), m_(m), options_(options) {}

  const RankResult& rank_at(unsigned t) {
    auto it = ranks_.find(t);
    if (it != ranks_.end()) return it->second;
    const auto cm = conditions_matrix(cfg_, m_, t, options_.mode);
    RankResult r = rank(cm.matrix, options_.rank);
    columns_[t] = cm.matrix.cols();
    return ranks_.emplace(t, std::move(r)).first->second;
  }

  std::size_t columns_at(unsigned t) {
    rank_at(t);
    return columns_.at(t);
  }

  bool kernel_nontrivial(unsigned t) { return rank_at(t).rank < columns_at(t); }

  AlphaResult run(unsigned lower, unsigned upper) {
    unsigned lo = lower, hi = upper;
    while (lo < hi) {
      const unsigned mid = lo + (hi - lo) / 2;
      if (kernel_nontrivial(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    AlphaResult out;
    out.m = m_;
    out.alpha = lo;
    auto& cert = out.certificate;
    cert.search_lower = lower;
    cert.search_upper = upper;
    cert.kernel_dimension = columns_at(lo) - rank_at(lo).rank;
    cert.columns = columns_at(lo);
    if (lo > 0) {
      cert.rank_below = rank_at(lo - 1).rank;
      cert.columns_below = columns_at(lo - 1);
    }
    for (const auto& [t, r] : ranks_) {
      cert.certified = cert.certified && r.certified();
      cert.primes_disagreed = cert.primes_disagreed || !r.primes_agree;
      for (auto p : r.primes_used) {
        if (std::find(cert.primes_used.begin(), cert.primes_used.end(), p) == cert.primes_used.end()) {
          cert.primes_used.push_back(p);
        }
      }
    }
    std::sort(cert.primes_used.begin(), cert.primes_used.end());
    return out;
  }

 private:
  const PointConfig& cfg_;
  unsigned m_;
  const AlphaOptions& options_;
  std::map<unsigned, RankResult> ranks_;
  std::map<unsigned, std::size_t> columns_;
};

AlphaResult alpha_with_known_alpha1(const PointConfig& cfg, unsigned m, const AlphaOptions& options,
                                    std::optional<unsigned> alpha1) {
  if (m < 1) throw InvalidArgument("multiplicity must be >= 1");
  require_valid(cfg);
  const unsigned pigeon = pigeonhole_degree(cfg.size(), cfg.N, m);
  AlphaSearch search(cfg, m, options);
  if (m == 1) return search.run(1, pigeon);
  if (!alpha1) alpha1 = alpha_with_known_alpha1(cfg, 1, options, std::nullopt).alpha;
  return search.run(m, std::min(m * *alpha1, pigeon));
}

}  // namespace

AlphaResult alpha_symbolic(const PointConfig& cfg, unsigned m, const AlphaOptions& options) {
  return alpha_with_known_alpha1(cfg, m, options, std::nullopt);
}

AlphaTable alpha_table(const PointConfig& cfg, unsigned m_max, const AlphaOptions& options) {
  if (m_max < 1) throw InvalidArgument("m_max must be >= 1");
  AlphaTable table;
  table.label = cfg.label;
  const auto first = alpha_with_known_alpha1(cfg, 1, options, std::nullopt);
  table.entries.emplace(1, first);
  for (unsigned m = 2; m <= m_max; ++m) {
    table.entries.emplace(m, alpha_with_known_alpha1(cfg, m, options, first.alpha));
  }
  return table;
}

GradedBasis graded_piece(const PointConfig& cfg, unsigned m, unsigned d, ConditionsMode mode) {
  const auto cm = conditions_matrix(cfg, m, d, mode);
  return {cfg.N + 1, d, kernel_basis(cm.matrix)};
}

std::size_t hilbert_function(const PointConfig& cfg, unsigned d) {
  require_valid(cfg);
  return rank(evaluation_matrix(cfg, d), RankOptions::exact()).rank;
}

std::vector<std::size_t> hilbert_function_until_stable(const PointConfig& cfg) {
  std::vector<std::size_t> values;
  for (unsigned d = 0;; ++d) {
    values.push_back(hilbert_function(cfg, d));
    if (values.back() == cfg.size()) break;
  }
  return values;
}

bool is_generic_position(const PointConfig& cfg) {
  const Integer n = static_cast<unsigned long>(cfg.size());
  for (unsigned d = 0;; ++d) {
    const Integer expected = std::min(binomial(d + cfg.N, cfg.N), n);
    if (Integer(static_cast<unsigned long>(hilbert_function(cfg, d))) != expected) return false;
    if (expected == n) return true;
  }
}

std::size_t IdealGenerators::total() const {
  std::size_t s = 0;
  for (const auto& g : generators) s += g.dimension();
  return s;
}

namespace {

/// x_k * f for every variable and every form of `piece`.
std::vector<std::vector<Rational>> linear_multiples(const GradedBasis& piece,
                                                    const MonomialBasis& from,
                                                    const MonomialBasis& to) {
  std::vector<std::vector<Rational>> out;
  for (const auto& f : piece.forms) {
    for (std::size_t k = 0; k < piece.nvars; ++k) {
      std::vector<Rational> g(to.size());
      MultiIndex e;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        e = from[i];
        ++e[k];
        g[to.index_of(e)] = f[i];
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

IdealGenerators minimal_generators_up_to(const PointConfig& cfg, unsigned d_max) {
  require_valid(cfg);
  IdealGenerators out;
  out.nvars = cfg.N + 1;
  out.complete_through = d_max;
  for (unsigned d = 0; d <= d_max; ++d) {
    const MonomialBasis basis(out.nvars, d);
    GradedBasis piece{out.nvars, d, kernel_basis(evaluation_matrix(cfg, d))};
    GradedBasis fresh{out.nvars, d, {}};
    std::vector<std::vector<Rational>> span;
    if (d > 0) span = linear_multiples(out.pieces[d - 1], MonomialBasis(out.nvars, d - 1), basis);
    for (const auto& v : piece.forms) {
      if (span_contains(span, {v}, basis.size())) continue;
      fresh.forms.push_back(v);
      span.push_back(v);
    }
    out.pieces.push_back(std::move(piece));
    out.generators.push_back(std::move(fresh));
  }
  return out;
}

IdealGenerators irrelevant_ideal(std::size_t nvars, unsigned complete_through) {
  IdealGenerators out;
  out.nvars = nvars;
  out.complete_through = complete_through;
  out.generators.push_back({nvars, 0, {}});
  GradedBasis linear{nvars, 1, {}};
  for (std::size_t k = 0; k < nvars; ++k) {
    std::vector<Rational> v(nvars);
    v[k] = 1;
    linear.forms.push_back(std::move(v));
  }
  out.generators.push_back(std::move(linear));
  for (unsigned d = 2; d <= complete_through; ++d) out.generators.push_back({nvars, d, {}});
  return out;
}

namespace {

/// Least degree carrying a generator, or complete_through + 1 when none is known.
unsigned initial_degree_lower_bound(const IdealGenerators& ideal) {
  for (unsigned d = 0; d < ideal.generators.size() && d <= ideal.complete_through; ++d) {
    if (!ideal.generators[d].empty()) return d;
  }
  return ideal.complete_through + 1;
}

}  // namespace

GradedBasis product_piece(const std::vector<IdealFactor>& factors, unsigned d) {
  std::size_t nvars = 0;
  std::vector<const IdealGenerators*> copies;
  for (const auto& f : factors) {
    if (f.ideal == nullptr) throw InvalidArgument("null ideal factor");
    if (nvars == 0) nvars = f.ideal->nvars;
    if (f.ideal->nvars != nvars) throw InvalidArgument("ideal factors over different rings");
    for (unsigned e = 0; e < f.exponent; ++e) copies.push_back(f.ideal);
  }

  std::vector<unsigned> alpha;
  unsigned alpha_sum = 0;
  for (const auto* c : copies) {
    alpha.push_back(initial_degree_lower_bound(*c));
    alpha_sum += alpha.back();
  }
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const long needed = static_cast<long>(d) - static_cast<long>(alpha_sum - alpha[i]);
    if (needed > static_cast<long>(copies[i]->complete_through)) {
      throw InsufficientGenerators("generators known through degree " +
                                   std::to_string(copies[i]->complete_through) +
                                   " but degree " + std::to_string(needed) + " is required");
    }
  }
  if (copies.empty()) {
    // Unit ideal; nvars is unknown without factors.
    throw InvalidArgument("product_piece needs at least one factor with a nonzero exponent");
  }

  std::vector<MonomialBasis> bases;
  for (unsigned k = 0; k <= d; ++k) bases.emplace_back(nvars, k);

  // pieces[k] spans the degree-k part of the running product; start at R.
  std::vector<std::vector<std::vector<Rational>>> pieces(d + 1);
  for (unsigned k = 0; k <= d; ++k) {
    for (std::size_t i = 0; i < bases[k].size(); ++i) {
      std::vector<Rational> v(bases[k].size());
      v[i] = 1;
      pieces[k].push_back(std::move(v));
    }
  }
  for (const auto* ideal : copies) {
    std::vector<std::vector<std::vector<Rational>>> next(d + 1);
    for (unsigned k = 0; k <= d; ++k) {
      std::vector<std::vector<Rational>> products;
      for (unsigned j = 0; j <= k && j < ideal->generators.size(); ++j) {
        for (const auto& g : ideal->generators[j].forms) {
          for (const auto& p : pieces[k - j]) {
            products.push_back(multiply_forms(bases[j], g, bases[k - j], p, bases[k]));
          }
        }
      }
      next[k] = products.empty() ? std::move(products) : span_basis(products, bases[k].size());
    }
    pieces = std::move(next);
  }
  return {nvars, d, std::move(pieces[d])};
}

}  // namespace fatpoints
