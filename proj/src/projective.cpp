#include "fatpoints/projective.hpp"

#include "fatpoints/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace fatpoints {

ProjectivePoint::ProjectivePoint(std::span<const Rational> raw) {
  if (raw.empty() || std::all_of(raw.begin(), raw.end(), [](const Rational& x) { return x == 0; })) {
    throw InvalidPoint("all coordinates are zero");
  }
  const Integer l = lcm_of_denominators(raw);
  coords_.reserve(raw.size());
  Integer g = 0;
  for (const auto& x : raw) {
    coords_.push_back(x.get_num() * (l / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coords_.back().get_mpz_t());
  }
  const auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Integer& z) { return z != 0; });
  if (*lead < 0) g = -g;
  for (auto& z : coords_) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
}

namespace {

std::vector<Rational> to_rationals(std::initializer_list<long> raw) {
  std::vector<Rational> out;
  for (long v : raw) out.emplace_back(v);
  return out;
}

}  // namespace

ProjectivePoint::ProjectivePoint(std::initializer_list<long> raw)
    : ProjectivePoint(std::span<const Rational>(to_rationals(raw))) {}

std::size_t ProjectivePoint::chart() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (mpz_cmpabs(coords_[i].get_mpz_t(), coords_[best].get_mpz_t()) > 0) best = i;
  }
  return best;
}

std::string ProjectivePoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].get_str();
  }
  return out + "]";
}

ProjectivePoint normalize_point(std::span<const Rational> raw) { return ProjectivePoint(raw); }

bool Hyperplane::contains(const ProjectivePoint& p) const {
  Integer s = 0;
  for (std::size_t i = 0; i < p.coords().size(); ++i) s += coeffs[i] * p[i];
  return s == 0;
}

std::vector<ConfigViolation> validate_config(const PointConfig& cfg) {
  std::vector<ConfigViolation> out;
  if (cfg.N < 1) {
    out.push_back({ConfigViolation::Kind::dimension_mismatch, 0, 0, "ambient dimension must be >= 1"});
  }
  if (cfg.points.empty()) {
    out.push_back({ConfigViolation::Kind::empty, 0, 0, "configuration has no points"});
  }
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    if (cfg.points[i].dimension() != cfg.N) {
      out.push_back({ConfigViolation::Kind::dimension_mismatch, i, i,
                     "point " + std::to_string(i) + " has " +
                         std::to_string(cfg.points[i].coords().size()) + " coordinates, expected " +
                         std::to_string(cfg.N + 1)});
    }
  }
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.points.size(); ++j) {
      if (cfg.points[i] == cfg.points[j]) {
        out.push_back({ConfigViolation::Kind::duplicate, i, j,
                       "points " + std::to_string(i) + " and " + std::to_string(j) +
                           " coincide"});
      }
    }
  }
  return out;
}

std::vector<ConfigViolation> validate_raw_points(std::size_t N,
                                                 const std::vector<std::vector<Rational>>& raw) {
  std::vector<ConfigViolation> out;
  PointConfig cfg{N, {}, {}};
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != N + 1) {
      out.push_back({ConfigViolation::Kind::dimension_mismatch, i, i,
                     "point " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                         " coordinates, expected " + std::to_string(N + 1)});
      continue;
    }
    if (std::all_of(raw[i].begin(), raw[i].end(), [](const Rational& x) { return x == 0; })) {
      out.push_back({ConfigViolation::Kind::zero_point, i, i,
                     "point " + std::to_string(i) + " has all coordinates zero"});
      continue;
    }
    cfg.points.emplace_back(raw[i]);
    kept.push_back(i);
  }
  for (auto v : validate_config(cfg)) {
    if (v.kind == ConfigViolation::Kind::empty && !raw.empty()) continue;
    if (v.kind == ConfigViolation::Kind::duplicate) {
      v.first = kept[v.first];
      v.second = kept[v.second];
      v.message = "points " + std::to_string(v.first) + " and " + std::to_string(v.second) +
                  " coincide";
    }
    out.push_back(std::move(v));
  }
  return out;
}

void require_valid(const PointConfig& cfg) {
  const auto violations = validate_config(cfg);
  if (violations.empty()) return;
  std::string msg = "invalid point configuration:";
  for (const auto& v : violations) msg += " " + v.message + ";";
  throw InvalidArgument(msg);
}

Integer count_points_of_height(std::size_t N, unsigned height) {
  // Primitive vectors in the box via Moebius inversion over the common gcd,
  // halved for the sign ambiguity.
  std::vector<int> mu(height + 1, 1);
  std::vector<bool> composite(height + 1, false);
  for (unsigned p = 2; p <= height; ++p) {
    if (composite[p]) continue;
    for (unsigned k = p; k <= height; k += p) {
      if (k != p) composite[k] = true;
      mu[k] = -mu[k];
    }
    const unsigned long long sq = static_cast<unsigned long long>(p) * p;
    for (unsigned long long k = sq; k <= height; k += sq) mu[k] = 0;
  }
  Integer primitive = 0;
  for (unsigned d = 1; d <= height; ++d) {
    if (mu[d] == 0) continue;
    Integer side = 2 * (height / d) + 1;
    Integer box;
    mpz_pow_ui(box.get_mpz_t(), side.get_mpz_t(), N + 1);
    primitive += mu[d] * (box - 1);
  }
  return primitive / 2;
}

namespace {

/// Uniform draw from [lo, hi] by rejection, so results depend only on the
/// engine's output sequence.
long uniform_in(std::mt19937_64& gen, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

}  // namespace

PointConfig sample_config(std::size_t n, std::size_t N, std::uint64_t seed, unsigned height) {
  if (n < 1 || N < 1 || height < 1) {
    throw InvalidArgument("sample_config requires n >= 1, N >= 1, height >= 1");
  }
  const Integer available = count_points_of_height(N, height);
  if (available < n) {
    throw CannotSample("only " + available.get_str() + " distinct points of P^" +
                       std::to_string(N) + " have height <= " + std::to_string(height) +
                       ", cannot sample " + std::to_string(n));
  }
  std::mt19937_64 gen(seed);
  PointConfig cfg{N, {}, "sample(n=" + std::to_string(n) + ",N=" + std::to_string(N) +
                             ",seed=" + std::to_string(seed) + ",height=" +
                             std::to_string(height) + ")"};
  std::set<ProjectivePoint> seen;
  std::vector<Rational> raw(N + 1);
  const long h = static_cast<long>(height);
  while (cfg.points.size() < n) {
    bool nonzero = false;
    for (auto& x : raw) {
      x = uniform_in(gen, -h, h);
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) continue;
    ProjectivePoint p(raw);
    if (seen.insert(p).second) cfg.points.push_back(std::move(p));
  }
  return cfg;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t h) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < h - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

PointConfig star_configuration(const std::vector<Hyperplane>& hyperplanes) {
  if (hyperplanes.empty()) throw InvalidArgument("no hyperplanes given");
  const std::size_t N = hyperplanes.front().dimension();
  if (N < 1) throw InvalidArgument("hyperplanes must live in P^N with N >= 1");
  for (const auto& H : hyperplanes) {
    if (H.dimension() != N) throw InvalidArgument("hyperplanes of different dimensions");
  }
  const std::size_t h = hyperplanes.size();
  if (h < N) {
    throw InvalidArgument("star configuration needs at least N = " + std::to_string(N) +
                          " hyperplanes");
  }

  PointConfig cfg{N, {}, "star(" + std::to_string(h) + " hyperplanes in P^" + std::to_string(N) + ")"};
  std::vector<std::size_t> idx(N);
  for (std::size_t i = 0; i < N; ++i) idx[i] = i;
  do {
    ExactMatrix system(N, N + 1);
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c <= N; ++c) system(r, c) = Rational(hyperplanes[idx[r]].coeffs[c]);
    }
    const auto kernel = kernel_basis(system);
    if (kernel.size() != 1) {
      std::string which;
      for (auto i : idx) which += (which.empty() ? "" : ",") + std::to_string(i);
      throw ImproperConfiguration("hyperplanes {" + which + "} do not meet in a single point");
    }
    ProjectivePoint p(kernel.front());
    std::size_t incident = 0;
    for (const auto& H : hyperplanes) incident += H.contains(p) ? 1 : 0;
    if (incident > N) {
      throw ImproperConfiguration("point " + p.to_string() + " lies on " +
                                  std::to_string(incident) + " hyperplanes");
    }
    cfg.points.push_back(std::move(p));
  } while (next_combination(idx, h));
  return cfg;
}

ExactMatrix evaluation_matrix(const PointConfig& cfg, unsigned degree) {
  const MonomialBasis basis(cfg.N + 1, degree);
  ExactMatrix m(cfg.size(), basis.size());
  Integer v;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const auto& p = cfg.points[i];
    for (std::size_t c = 0; c < basis.size(); ++c) {
      v = 1;
      Integer f;
      for (std::size_t k = 0; k <= cfg.N; ++k) {
        if (basis[c][k] == 0) continue;
        mpz_pow_ui(f.get_mpz_t(), p[k].get_mpz_t(), basis[c][k]);
        v *= f;
      }
      m(i, c) = Rational(v);
    }
  }
  return m;
}

std::optional<std::vector<Rational>> quadric_witness(const PointConfig& cfg) {
  auto kernel = kernel_basis(evaluation_matrix(cfg, 2));
  if (kernel.empty()) return std::nullopt;
  return std::move(kernel.front());
}

namespace {

std::size_t exact_rank(const ExactMatrix& m) {
  return rank(m, RankOptions::exact()).rank;
}

PointConfig subset(const PointConfig& cfg, const std::vector<std::size_t>& indices) {
  PointConfig out{cfg.N, {}, cfg.label};
  for (auto i : indices) out.points.push_back(cfg.points[i]);
  return out;
}

}  // namespace

PointConfig generic_subset(const PointConfig& cfg, std::size_t t) {
  if (t > cfg.size()) {
    throw InvalidArgument("subset size " + std::to_string(t) + " exceeds " +
                          std::to_string(cfg.size()) + " points");
  }
  // Degrees up to the point where the full configuration's Hilbert function
  // reaches n; beyond it every subset imposes independent conditions.
  unsigned top = 0;
  while (exact_rank(evaluation_matrix(cfg, top)) < cfg.size()) ++top;

  std::vector<std::size_t> chosen;
  std::vector<bool> used(cfg.size(), false);
  while (chosen.size() < t) {
    std::size_t best = cfg.size();
    std::vector<std::size_t> best_profile;
    for (std::size_t c = 0; c < cfg.size(); ++c) {
      if (used[c]) continue;
      auto trial = chosen;
      trial.push_back(c);
      const PointConfig sub = subset(cfg, trial);
      std::vector<std::size_t> profile;
      for (unsigned d = 0; d <= top; ++d) profile.push_back(exact_rank(evaluation_matrix(sub, d)));
      if (best == cfg.size() || profile > best_profile) {
        best = c;
        best_profile = std::move(profile);
      }
    }
    used[best] = true;
    chosen.push_back(best);
  }
  std::sort(chosen.begin(), chosen.end());
  PointConfig out = subset(cfg, chosen);
  out.label = cfg.label.empty() ? "subset" : cfg.label + " subset";
  return out;
}

}  // namespace fatpoints
