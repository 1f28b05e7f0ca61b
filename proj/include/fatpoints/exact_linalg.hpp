#pragma once

#include "fatpoints/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace fatpoints {

/// Dense row-major matrix over the rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  const std::vector<Rational>& entries() const { return entries_; }

  ExactMatrix transpose() const;
  void append_row(std::span<const Rational> values);

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Dense row-major integer matrix; the working form of the exact kernels.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> entries;

  Integer& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Multiplies each row by the lcm of its denominators. Row scaling preserves
/// rank and the right kernel.
IntegerMatrix clear_denominators(const ExactMatrix& m);

enum class RankStrategy {
  exact,                 // fraction-free elimination
  modular,               // one prime
  multimodular,          // two primes, agreement taken as evidence
  multimodular_certify,  // two primes, escalating to exact elimination when needed
};

/// How a reported rank was obtained.
enum class RankProvenance { exact, modular, multimodular_certified, multimodular_heuristic };

std::string_view to_string(RankStrategy s);
std::string_view to_string(RankProvenance p);
RankStrategy parse_rank_strategy(std::string_view text);

inline constexpr std::uint64_t kDefaultPrimeSeed = 0x5eed'f47'9017ULL;

struct RankOptions {
  RankStrategy strategy = RankStrategy::multimodular;
  /// Explicit primes; when empty they are drawn from [2^15, 2^16) using `seed`.
  std::vector<std::uint32_t> primes;
  std::uint64_t seed = kDefaultPrimeSeed;

  static RankOptions exact() {
    RankOptions o;
    o.strategy = RankStrategy::exact;
    return o;
  }
};

struct RankResult {
  std::size_t rank = 0;
  RankProvenance strategy = RankProvenance::exact;
  /// Ascending; empty for the exact strategy.
  std::vector<std::uint32_t> primes_used;
  /// False when the modular images disagreed (multimodular only).
  bool primes_agree = true;

  /// True when `rank` is the rank over the rationals.
  bool certified() const {
    return strategy == RankProvenance::exact || strategy == RankProvenance::multimodular_certified;
  }
};

RankResult rank(const ExactMatrix& m, const RankOptions& options = {});

/// Basis of the right null space in reduced column-echelon parametrization:
/// one vector per free column (left to right), first nonzero entry 1.
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);

/// Reduced row echelon form, zero rows dropped.
std::vector<std::vector<Rational>> row_space_basis(const ExactMatrix& m);

// Lower-level kernels, exposed for testing and for callers that already hold
// integer data.

/// Fraction-free (Bareiss) elimination; returns the rank.
std::size_t bareiss_rank(IntegerMatrix m);

/// Rank of the reduction mod p. Requires p odd prime below 2^32.
std::size_t rank_mod_p(const IntegerMatrix& m, std::uint32_t p);

bool is_prime(std::uint32_t n);

/// `count` distinct primes in [2^15, 2^16), deterministic in `seed`, ascending.
std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed);

}  // namespace fatpoints
