#pragma once

#include "fatpoints/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace fatpoints {

using MultiIndex = std::vector<unsigned>;

unsigned total_degree(std::span<const unsigned> e);

/// All exponent vectors of length `nvars` and total degree `degree`, in
/// descending lexicographic order: (d,0,...,0) first, (0,...,0,d) last.
std::vector<MultiIndex> deglex_monomials(std::size_t nvars, unsigned degree);

/// All exponent vectors with total degree <= `max_degree`, by increasing
/// degree and descending lex within a degree.
std::vector<MultiIndex> deglex_monomials_up_to(std::size_t nvars, unsigned max_degree);

/// The degree-d monomial basis of k[x_0..x_{nvars-1}] with index lookup.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, unsigned degree);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<MultiIndex>& monomials() const { return monomials_; }
  std::size_t index_of(const MultiIndex& e) const;

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, std::size_t> index_;
};

/// Linearly independent degree-d forms, as coefficient vectors over the
/// deglex basis of that degree.
struct GradedBasis {
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::vector<std::vector<Rational>> forms;

  std::size_t dimension() const { return forms.size(); }
  bool empty() const { return forms.empty(); }
};

/// Product of a degree-a form and a degree-b form.
std::vector<Rational> multiply_forms(const MonomialBasis& a_basis, std::span<const Rational> a,
                                     const MonomialBasis& b_basis, std::span<const Rational> b,
                                     const MonomialBasis& product_basis);

/// Basis (reduced row echelon) of the span of the given vectors.
std::vector<std::vector<Rational>> span_basis(const std::vector<std::vector<Rational>>& vectors,
                                              std::size_t dim);

/// dim(span(a ∪ b)) == dim(span(a)).
bool span_contains(const std::vector<std::vector<Rational>>& a,
                   const std::vector<std::vector<Rational>>& b, std::size_t dim);

/// Readable rendering such as "x0*x1^2 - 3/2*x2^3".
std::string format_form(const MonomialBasis& basis, std::span<const Rational> coeffs);

}  // namespace fatpoints
