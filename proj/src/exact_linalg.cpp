#include "fatpoints/exact_linalg.hpp"

#include "fatpoints/errors.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <stdexcept>
#include <string>

namespace fatpoints {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InvalidArgument("matrix entry count " + std::to_string(entries_.size()) +
                          " does not match " + std::to_string(rows_) + "x" +
                          std::to_string(cols_));
  }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void ExactMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InvalidArgument("row length mismatch");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

IntegerMatrix clear_denominators(const ExactMatrix& m) {
  IntegerMatrix out{m.rows(), m.cols(), std::vector<Integer>(m.rows() * m.cols())};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    const Integer l = lcm_of_denominators(row);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(r, c) = row[c].get_num() * (l / row[c].get_den());
    }
  }
  return out;
}

std::string_view to_string(RankStrategy s) {
  switch (s) {
    case RankStrategy::exact: return "exact";
    case RankStrategy::modular: return "modular";
    case RankStrategy::multimodular: return "multimodular";
    case RankStrategy::multimodular_certify: return "multimodular-certify";
  }
  return "?";
}

std::string_view to_string(RankProvenance p) {
  switch (p) {
    case RankProvenance::exact: return "exact";
    case RankProvenance::modular: return "modular";
    case RankProvenance::multimodular_certified: return "multimodular-certified";
    case RankProvenance::multimodular_heuristic: return "multimodular-heuristic";
  }
  return "?";
}

RankStrategy parse_rank_strategy(std::string_view text) {
  if (text == "exact") return RankStrategy::exact;
  if (text == "modular") return RankStrategy::modular;
  if (text == "multimodular") return RankStrategy::multimodular;
  if (text == "multimodular-certify") return RankStrategy::multimodular_certify;
  throw InvalidArgument("unknown rank strategy '" + std::string(text) + "'");
}

std::size_t bareiss_rank(IntegerMatrix m) {
  std::size_t r = 0;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Integer& pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const Integer a = m(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        tmp = pivot * m(i, j);
        if (a != 0) tmp -= a * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

namespace {

/// Montante (fraction-free Gauss-Jordan) elimination. On return the pivot rows
/// hold det * RREF, where det is the common pivot value.
struct FractionFreeRref {
  IntegerMatrix m;
  std::vector<std::size_t> pivot_cols;
  Integer scale = 1;
};

FractionFreeRref fraction_free_rref(IntegerMatrix m) {
  FractionFreeRref out;
  std::size_t r = 0;
  Integer prev = 1;
  Integer tmp;
  Integer rem;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Integer pivot = m(r, c);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const Integer a = m(i, c);
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (j == c) continue;
        tmp = pivot * m(i, j);
        if (a != 0) tmp -= a * m(r, j);
        if (tmp == 0) {
          m(i, j) = 0;
          continue;
        }
        mpz_tdiv_qr(m(i, j).get_mpz_t(), rem.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("fraction-free elimination: inexact division");
      }
      m(i, c) = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.scale = prev;
  out.m = std::move(m);
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) {
  const auto rref = fraction_free_rref(clear_denominators(m));
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : rref.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < rref.pivot_cols.size(); ++i) {
      v[rref.pivot_cols[i]] = Rational(-rref.m(i, f), rref.scale);
      v[rref.pivot_cols[i]].canonicalize();
    }
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    const Rational lead = *first;
    if (lead != 1) {
      for (auto& x : v) x /= lead;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> row_space_basis(const ExactMatrix& m) {
  const auto rref = fraction_free_rref(clear_denominators(m));
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < rref.pivot_cols.size(); ++i) {
    std::vector<Rational> v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (rref.m(i, j) == 0) continue;
      v[j] = Rational(rref.m(i, j), rref.scale);
      v[j].canonicalize();
    }
    rows.push_back(std::move(v));
  }
  return rows;
}

std::size_t rank_mod_p(const IntegerMatrix& m, std::uint32_t p) {
  std::vector<std::uint64_t> a(m.entries.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] = mpz_fdiv_ui(m.entries[k].get_mpz_t(), p);
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * m.cols + c]; };
  auto inverse = [p](std::uint64_t x) {
    // Fermat: x^(p-2)
    std::uint64_t result = 1, base = x % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(at(piv, j), at(r, j));
    }
    const std::uint64_t inv = inverse(at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) at(r, j) = at(r, j) * inv % p;
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const std::uint64_t f = at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j) {
        at(i, j) = (at(i, j) + (p - f) * at(r, j)) % p;
      }
    }
    ++r;
  }
  return r;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed) {
  constexpr std::uint32_t lo = 1u << 15;
  std::mt19937_64 gen(seed);
  std::vector<std::uint32_t> primes;
  while (primes.size() < count) {
    const auto candidate = static_cast<std::uint32_t>(lo + gen() % lo);
    if (is_prime(candidate) &&
        std::find(primes.begin(), primes.end(), candidate) == primes.end()) {
      primes.push_back(candidate);
    }
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

namespace {

void check_primes(const std::vector<std::uint32_t>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] == 2) throw InvalidArgument("prime 2 is not allowed");
    if (!is_prime(primes[i])) {
      throw InvalidArgument(std::to_string(primes[i]) + " is not prime");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (primes[i] == primes[j]) {
        throw InvalidArgument("repeated prime " + std::to_string(primes[i]));
      }
    }
  }
}

std::vector<std::size_t> modular_ranks(const IntegerMatrix& m,
                                       const std::vector<std::uint32_t>& primes) {
  std::vector<std::size_t> ranks(primes.size());
  if (primes.size() == 1) {
    ranks[0] = rank_mod_p(m, primes[0]);
    return ranks;
  }
  std::vector<std::future<std::size_t>> tasks;
  for (auto p : primes) {
    tasks.push_back(std::async(std::launch::async, [&m, p] { return rank_mod_p(m, p); }));
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) ranks[i] = tasks[i].get();
  return ranks;
}

}  // namespace

RankResult rank(const ExactMatrix& m, const RankOptions& options) {
  check_primes(options.primes);
  RankResult result;
  if (m.rows() == 0 || m.cols() == 0) {
    result.strategy = options.strategy == RankStrategy::exact
                          ? RankProvenance::exact
                          : RankProvenance::multimodular_certified;
    if (options.strategy == RankStrategy::modular) result.strategy = RankProvenance::modular;
    return result;
  }

  const IntegerMatrix im = clear_denominators(m);
  if (options.strategy == RankStrategy::exact) {
    result.rank = bareiss_rank(im);
    result.strategy = RankProvenance::exact;
    return result;
  }

  const std::size_t wanted = options.strategy == RankStrategy::modular ? 1 : 2;
  std::vector<std::uint32_t> primes = options.primes;
  if (primes.empty()) primes = random_primes(wanted, options.seed);
  if (options.strategy == RankStrategy::modular) primes.resize(1);
  std::sort(primes.begin(), primes.end());

  const auto ranks = modular_ranks(im, primes);
  result.primes_used = primes;
  result.rank = *std::max_element(ranks.begin(), ranks.end());
  result.primes_agree = std::all_of(ranks.begin(), ranks.end(),
                                    [&](std::size_t r) { return r == ranks.front(); });

  switch (options.strategy) {
    case RankStrategy::modular:
      result.strategy = RankProvenance::modular;
      break;
    case RankStrategy::multimodular:
      result.strategy = RankProvenance::multimodular_heuristic;
      break;
    case RankStrategy::multimodular_certify:
      // A modular rank is a lower bound, so reaching min(rows, cols) is a proof.
      if (result.rank < std::min(m.rows(), m.cols())) result.rank = bareiss_rank(im);
      result.strategy = RankProvenance::multimodular_certified;
      result.primes_agree = true;
      break;
    case RankStrategy::exact:
      break;
  }
  return result;
}

}  // namespace fatpoints
