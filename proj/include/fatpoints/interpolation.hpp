#pragma once

#include "fatpoints/exact_linalg.hpp"
#include "fatpoints/forms.hpp"
#include "fatpoints/projective.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoints {

enum class ConditionsMode { homogeneous, affine };

std::string_view to_string(ConditionsMode mode);
ConditionsMode parse_conditions_mode(std::string_view text);

struct ConditionRow {
  std::size_t point = 0;
  /// Derivative multi-index: N+1 entries in homogeneous mode, N in affine
  /// mode (the chart coordinate removed).
  MultiIndex derivative;
};

/// Linear conditions on the coefficients of a degree-t form that vanishes to
/// order m at every point. The kernel is the degree-t piece of the m-th
/// symbolic power of the point ideal.
struct ConditionsMatrix {
  ExactMatrix matrix;
  unsigned m = 1;
  unsigned t = 0;
  ConditionsMode mode = ConditionsMode::affine;
  std::vector<MultiIndex> column_index;
  std::vector<ConditionRow> row_index;
};

/// Homogeneous rows carry binom(a, b) * p^(a - b) for every derivative b with
/// |b| <= m-1; affine rows use the chart of the largest coordinate and are
/// scaled to integers by a power of the chart coordinate.
ConditionsMatrix conditions_matrix(const PointConfig& cfg, unsigned m, unsigned t,
                                   ConditionsMode mode = ConditionsMode::affine);

struct AlphaOptions {
  RankOptions rank;
  ConditionsMode mode = ConditionsMode::affine;
};

/// Evidence for alpha_m: kernel dimension at alpha_m and full column rank at
/// alpha_m - 1.
struct AlphaCertificate {
  unsigned search_lower = 0;
  unsigned search_upper = 0;
  std::size_t kernel_dimension = 0;
  std::size_t columns = 0;
  /// Rank of the conditions matrix at alpha_m - 1 (equal to its column count).
  std::size_t rank_below = 0;
  std::size_t columns_below = 0;
  /// Every rank that decided the search was certified.
  bool certified = true;
  /// Some multimodular evaluation saw disagreeing primes.
  bool primes_disagreed = false;
  std::vector<std::uint32_t> primes_used;
};

struct AlphaResult {
  unsigned m = 1;
  unsigned alpha = 0;
  AlphaCertificate certificate;
};

/// Least t with a nonzero form of degree t vanishing to order m at every
/// point. Binary search over [m, min(m * alpha_1, pigeonhole bound)].
AlphaResult alpha_symbolic(const PointConfig& cfg, unsigned m, const AlphaOptions& options = {});

/// Degree at which the conditions matrix first has more columns than rows.
unsigned pigeonhole_degree(std::size_t n, std::size_t N, unsigned m);

struct AlphaTable {
  std::string label;
  std::map<unsigned, AlphaResult> entries;
};

AlphaTable alpha_table(const PointConfig& cfg, unsigned m_max, const AlphaOptions& options = {});

/// Basis of the degree-d forms vanishing to order m at every point.
GradedBasis graded_piece(const PointConfig& cfg, unsigned m, unsigned d,
                         ConditionsMode mode = ConditionsMode::affine);

std::size_t hilbert_function(const PointConfig& cfg, unsigned d);

/// H(d) for d = 0, 1, ... up to and including the first degree where H = n.
std::vector<std::size_t> hilbert_function_until_stable(const PointConfig& cfg);

bool is_generic_position(const PointConfig& cfg);

/// Minimal generators of an ideal through `complete_through`: generators[d]
/// are the new generators needed in degree d.
struct IdealGenerators {
  std::size_t nvars = 0;
  unsigned complete_through = 0;
  std::vector<GradedBasis> generators;
  /// Full graded pieces I_d, d <= complete_through.
  std::vector<GradedBasis> pieces;

  std::size_t count_in_degree(unsigned d) const {
    return d < generators.size() ? generators[d].dimension() : 0;
  }
  std::size_t total() const;
};

IdealGenerators minimal_generators_up_to(const PointConfig& cfg, unsigned d_max);

/// The irrelevant ideal (x_0, ..., x_N), complete in every degree.
IdealGenerators irrelevant_ideal(std::size_t nvars, unsigned complete_through);

struct IdealFactor {
  const IdealGenerators* ideal = nullptr;
  unsigned exponent = 0;
};

/// Degree-d piece of the product of ideal powers. Throws InsufficientGenerators
/// when a factor's generators are not known up to the degree that matters.
GradedBasis product_piece(const std::vector<IdealFactor>& factors, unsigned d);

}  // namespace fatpoints
