#pragma once

#include "fatpoints/exact_linalg.hpp"
#include "fatpoints/forms.hpp"
#include "fatpoints/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fatpoints {

/// A point of P^N in normal form: integer coordinates with gcd 1 and a
/// positive first nonzero coordinate.
class ProjectivePoint {
 public:
  /// Throws InvalidPoint when every coordinate is zero.
  explicit ProjectivePoint(std::span<const Rational> raw);
  explicit ProjectivePoint(std::initializer_list<long> raw);

  std::size_t dimension() const { return coords_.size() - 1; }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  /// Index of the coordinate of largest absolute value, ties to the lowest index.
  std::size_t chart() const;

  std::string to_string() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Integer> coords_;
};

/// Canonical representative of the projective class of `raw`.
ProjectivePoint normalize_point(std::span<const Rational> raw);

/// A hyperplane sum_i coeffs[i] x_i = 0, normalized like a point.
struct Hyperplane {
  ProjectivePoint coeffs;

  explicit Hyperplane(std::span<const Rational> raw) : coeffs(raw) {}
  explicit Hyperplane(std::initializer_list<long> raw) : coeffs(raw) {}
  std::size_t dimension() const { return coeffs.dimension(); }
  bool contains(const ProjectivePoint& p) const;
};

struct PointConfig {
  std::size_t N = 0;
  std::vector<ProjectivePoint> points;
  std::string label;

  std::size_t size() const { return points.size(); }
};

struct ConfigViolation {
  enum class Kind { duplicate, zero_point, dimension_mismatch, empty };
  Kind kind;
  std::size_t first = 0;
  std::size_t second = 0;
  std::string message;
};

/// Empty result means the configuration is valid.
std::vector<ConfigViolation> validate_config(const PointConfig& cfg);

/// Validation over raw (pre-normalization) coordinates, so that zero points
/// and ragged rows can be reported rather than thrown.
std::vector<ConfigViolation> validate_raw_points(std::size_t N,
                                                 const std::vector<std::vector<Rational>>& raw);

/// Throws InvalidArgument listing every violation.
void require_valid(const PointConfig& cfg);

/// Number of distinct points of P^N with a representative in [-height, height]^(N+1).
Integer count_points_of_height(std::size_t N, unsigned height);

/// n distinct points with integer coordinates uniform in [-height, height].
/// Deterministic in (n, N, seed, height) across platforms.
PointConfig sample_config(std::size_t n, std::size_t N, std::uint64_t seed, unsigned height);

/// The binom(h, N) intersection points of N-subsets of the hyperplanes, in
/// lexicographic order of the subsets. Throws ImproperConfiguration when the
/// hyperplanes do not meet properly.
PointConfig star_configuration(const std::vector<Hyperplane>& hyperplanes);

/// Matrix whose row i evaluates the degree-d monomials (deglex) at point i.
ExactMatrix evaluation_matrix(const PointConfig& cfg, unsigned degree);

/// A nonzero quadric through every point, as coefficients over the degree-2
/// deglex basis, or nullopt.
std::optional<std::vector<Rational>> quadric_witness(const PointConfig& cfg);

/// Greedy rank-maximizing subset of t points (indices ascending in output).
PointConfig generic_subset(const PointConfig& cfg, std::size_t t);

}  // namespace fatpoints
