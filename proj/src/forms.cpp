#include "fatpoints/forms.hpp"

#include "fatpoints/errors.hpp"
#include "fatpoints/exact_linalg.hpp"

#include <numeric>
#include <string>

namespace fatpoints {

unsigned total_degree(std::span<const unsigned> e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

namespace {

void enumerate(std::size_t pos, unsigned remaining, MultiIndex& current,
               std::vector<MultiIndex>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[pos] = e;
    enumerate(pos + 1, remaining - e, current, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> deglex_monomials(std::size_t nvars, unsigned degree) {
  std::vector<MultiIndex> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  MultiIndex current(nvars, 0);
  enumerate(0, degree, current, out);
  return out;
}

std::vector<MultiIndex> deglex_monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<MultiIndex> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto level = deglex_monomials(nvars, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree)
    : nvars_(nvars), degree_(degree), monomials_(deglex_monomials(nvars, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const MultiIndex& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw InvalidArgument("monomial not in basis");
  return it->second;
}

std::vector<Rational> multiply_forms(const MonomialBasis& a_basis, std::span<const Rational> a,
                                     const MonomialBasis& b_basis, std::span<const Rational> b,
                                     const MonomialBasis& product_basis) {
  std::vector<Rational> out(product_basis.size());
  MultiIndex e(product_basis.nvars());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a_basis[i][k] + b_basis[j][k];
      out[product_basis.index_of(e)] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<std::vector<Rational>> span_basis(const std::vector<std::vector<Rational>>& vectors,
                                              std::size_t dim) {
  ExactMatrix m(0, dim);
  for (const auto& v : vectors) m.append_row(v);
  return row_space_basis(m);
}

bool span_contains(const std::vector<std::vector<Rational>>& a,
                   const std::vector<std::vector<Rational>>& b, std::size_t dim) {
  if (b.empty()) return true;
  ExactMatrix m(0, dim);
  for (const auto& v : a) m.append_row(v);
  const auto base = rank(m, RankOptions::exact()).rank;
  for (const auto& v : b) m.append_row(v);
  return rank(m, RankOptions::exact()).rank == base;
}

std::string format_form(const MonomialBasis& basis, std::span<const Rational> coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t k = 0; k < basis[i].size(); ++k) {
      const unsigned e = basis[i][k];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(k);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace fatpoints
