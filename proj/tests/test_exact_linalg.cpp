#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"

#include "fatpoints/errors.hpp"
#include "fatpoints/exact_linalg.hpp"
#include "fatpoints/interpolation.hpp"
#include "fatpoints/rational.hpp"

#include <random>

using namespace fatpoints;

namespace {

std::vector<oracle::Row> rows_of(const ExactMatrix& m) {
  std::vector<oracle::Row> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

// Product of random factors, so the rank is usually the inner dimension;
// entries get random denominators afterwards.
ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  const std::size_t rows = dim(rng), cols = dim(rng), inner = dim(rng);
  ExactMatrix a(rows, inner), b(inner, cols), m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) a(i, k) = entry(rng);
  for (std::size_t k = 0; k < inner; ++k)
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = entry(rng);
  for (std::size_t i = 0; i < rows; ++i) {
    const Rational scale(1, den(rng));
    for (std::size_t j = 0; j < cols; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < inner; ++k) s += a(i, k) * b(k, j);
      m(i, j) = s * scale;
    }
  }
  return m;
}

bool in_kernel(const ExactMatrix& m, const std::vector<Rational>& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("5/3") == corpus::frac(5, 3));
  CHECK(parse_rational("-4/6") == corpus::frac(-2, 3));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(corpus::frac(10, 4)) == "5/2");
  CHECK(to_string(corpus::frac(-6, 3)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
  CHECK(binomial(5, 2) == 10);
}

TEST_CASE("rank examples") {
  const ExactMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (auto s : {RankStrategy::exact, RankStrategy::modular, RankStrategy::multimodular,
                 RankStrategy::multimodular_certify}) {
    RankOptions o;
    o.strategy = s;
    CHECK(rank(id, o).rank == 3);
    CHECK(rank(ExactMatrix{{1, 2}, {2, 4}}, o).rank == 1);
  }
  CHECK(rank(ExactMatrix(0, 4)).rank == 0);
  CHECK(rank(ExactMatrix(3, 0)).rank == 0);
}

TEST_CASE("conditions matrix of three points has a one-dimensional kernel") {
  const auto cm = conditions_matrix(corpus::make(corpus::kCoord3), 2, 3, ConditionsMode::homogeneous);
  REQUIRE(cm.matrix.rows() == 12);
  REQUIRE(cm.matrix.cols() == 10);
  CHECK(rank(cm.matrix, RankOptions::exact()).rank == 9);
  CHECK(oracle::naive_rank(rows_of(cm.matrix)) == 9);
  const auto k = kernel_basis(cm.matrix);
  REQUIRE(k.size() == 1);
  for (std::size_t c = 0; c < cm.column_index.size(); ++c)
    CHECK(k[0][c] == (cm.column_index[c] == MultiIndex{1, 1, 1} ? 1 : 0));

  const auto other = conditions_matrix(corpus::make(corpus::kSeed42), 2, 3, ConditionsMode::homogeneous);
  CHECK(rank(other.matrix, RankOptions::exact()).rank == 9);
  CHECK(oracle::naive_rank(rows_of(other.matrix)) == 9);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(ExactMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).empty());
  const auto k = kernel_basis(ExactMatrix(2, 3));
  REQUIRE(k.size() == 3);
  CHECK(k[0] == std::vector<Rational>{1, 0, 0});
  CHECK(k[1] == std::vector<Rational>{0, 1, 0});
  CHECK(k[2] == std::vector<Rational>{0, 0, 1});

  const auto ev = evaluation_matrix(corpus::make(corpus::kFiveSeed7), 2);
  REQUIRE(ev.rows() == 5);
  REQUIRE(ev.cols() == 6);
  CHECK(oracle::naive_rank(rows_of(ev)) == 5);
  const auto conic = kernel_basis(ev);
  REQUIRE(conic.size() == 1);
  CHECK(in_kernel(ev, conic[0]));
}

TEST_CASE("kernel vectors are normalized and pivots run left to right") {
  const ExactMatrix m{{2, 4, 6, 8}, {1, 2, 4, 5}};
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) {
    CHECK(in_kernel(m, v));
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    REQUIRE(it != v.end());
    CHECK(*it == 1);
  }
  CHECK(k[0] == std::vector<Rational>{1, corpus::frac(-1, 2), 0, 0});
  CHECK(k[1] == std::vector<Rational>{1, 0, 1, -1});
}

TEST_CASE("prime validation") {
  const ExactMatrix id{{1, 0}, {0, 1}};
  RankOptions o;
  o.strategy = RankStrategy::multimodular;
  o.primes = {2, 32771};
  CHECK_THROWS_AS(rank(id, o), InvalidArgument);
  o.primes = {32771, 32771};
  CHECK_THROWS_AS(rank(id, o), InvalidArgument);
  o.primes = {32769, 32771};
  CHECK_THROWS_AS(rank(id, o), InvalidArgument);
  o.primes = {32771, 32779};
  const auto r = rank(id, o);
  CHECK(r.rank == 2);
  CHECK(r.primes_used == std::vector<std::uint32_t>{32771, 32779});
}

TEST_CASE("random primes are deterministic, distinct and in range") {
  const auto a = random_primes(2, 17), b = random_primes(2, 17);
  CHECK(a == b);
  REQUIRE(a.size() == 2);
  CHECK(a[0] < a[1]);
  for (auto p : a) {
    CHECK(p >= (1u << 15));
    CHECK(p < (1u << 16));
    CHECK(is_prime(p));
  }
}

TEST_CASE("modular rank drops only at primes dividing the minors") {
  const ExactMatrix m{{32771, 0}, {0, 1}};
  IntegerMatrix im = clear_denominators(m);
  CHECK(rank_mod_p(im, 32771) == 1);
  CHECK(rank_mod_p(im, 32779) == 2);
  RankOptions o;
  o.strategy = RankStrategy::multimodular;
  o.primes = {32771, 32779};
  const auto r = rank(m, o);
  CHECK(r.rank == 2);
  CHECK_FALSE(r.primes_agree);
  CHECK_FALSE(r.certified());

  o.strategy = RankStrategy::multimodular_certify;
  o.primes = {32771, 32779};
  const auto c = rank(m, o);
  CHECK(c.rank == 2);
  CHECK(c.certified());
}

TEST_CASE("rank properties on seeded random matrices") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 120; ++trial) {
    const ExactMatrix m = random_matrix(rng, 30);
    const std::size_t exact = rank(m, RankOptions::exact()).rank;
    CAPTURE(trial);
    CHECK(exact == oracle::naive_rank(rows_of(m)));
    CHECK(exact == bareiss_rank(clear_denominators(m)));
    CHECK(rank(m.transpose(), RankOptions::exact()).rank == exact);

    RankOptions mm;
    mm.seed = 1000 + trial;
    const auto h = rank(m, mm);
    CHECK(h.rank == exact);
    CHECK(h.primes_used.size() == 2);
    for (auto p : h.primes_used) CHECK(rank_mod_p(clear_denominators(m), p) <= exact);

    ExactMatrix scaled = m;
    for (std::size_t c = 0; c < m.cols(); ++c) scaled(0, c) *= corpus::frac(-7, 3);
    CHECK(rank(scaled, RankOptions::exact()).rank == exact);

    if (m.rows() <= 20 && m.cols() <= 20) {
      const auto k = kernel_basis(m);
      CHECK(k.size() + exact == m.cols());
      CHECK(kernel_basis(scaled) == k);
      for (const auto& v : k) CHECK(in_kernel(m, v));
    }
  }
}

TEST_CASE("strategy names round trip") {
  for (auto s : {RankStrategy::exact, RankStrategy::modular, RankStrategy::multimodular,
                 RankStrategy::multimodular_certify})
    CHECK(parse_rank_strategy(to_string(s)) == s);
  CHECK_THROWS_AS(parse_rank_strategy("fast"), InvalidArgument);
}
