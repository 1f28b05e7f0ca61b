#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"

#include "fatpoints/errors.hpp"
#include "fatpoints/interpolation.hpp"
#include "fatpoints/monomial_ideal.hpp"

using namespace fatpoints;

namespace {

AlphaOptions exact_opts(ConditionsMode mode = ConditionsMode::affine) {
  AlphaOptions o;
  o.rank = RankOptions::exact();
  o.mode = mode;
  return o;
}

std::size_t kernel_dim(const PointConfig& cfg, unsigned m, unsigned t, ConditionsMode mode) {
  const auto cm = conditions_matrix(cfg, m, t, mode);
  return cm.matrix.cols() - rank(cm.matrix, RankOptions::exact()).rank;
}

std::vector<Rational> monomial_vector(std::size_t nvars, unsigned d, const MultiIndex& e) {
  MonomialBasis b(nvars, d);
  std::vector<Rational> v(b.size());
  v[b.index_of(e)] = 1;
  return v;
}

}  // namespace

TEST_CASE("deglex enumeration") {
  const auto m = deglex_monomials(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m.front() == MultiIndex{2, 0, 0});
  CHECK(m[1] == MultiIndex{1, 1, 0});
  CHECK(m.back() == MultiIndex{0, 0, 2});
  CHECK(deglex_monomials_up_to(3, 2).size() == 10);
}

TEST_CASE("conditions matrix shapes") {
  const auto single = conditions_matrix(corpus::make(corpus::kSinglePoint), 1, 1, ConditionsMode::homogeneous);
  CHECK(single.matrix == ExactMatrix{{1, 0, 0}});

  const auto three = corpus::make(corpus::kSeed42);
  CHECK(conditions_matrix(three, 2, 3, ConditionsMode::homogeneous).matrix.rows() == 12);
  CHECK(conditions_matrix(three, 2, 3, ConditionsMode::homogeneous).matrix.cols() == 10);
  CHECK(conditions_matrix(three, 2, 3, ConditionsMode::affine).matrix.rows() == 9);
  CHECK(conditions_matrix(three, 2, 3, ConditionsMode::affine).matrix.cols() == 10);

  for (const auto& e : corpus::all()) {
    const auto cfg = corpus::make(e);
    const std::size_t n = cfg.size(), N = cfg.N;
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned t = 0; t <= 4; ++t) {
        const auto h = conditions_matrix(cfg, m, t, ConditionsMode::homogeneous);
        const auto a = conditions_matrix(cfg, m, t, ConditionsMode::affine);
        CHECK(h.matrix.rows() == n * binomial(m + N, m - 1));
        CHECK(a.matrix.rows() == n * binomial(m - 1 + N, N));
        CHECK(h.matrix.cols() == binomial(t + N, N));
        CHECK(a.matrix.cols() == h.matrix.cols());
        CHECK(h.row_index.size() == h.matrix.rows());
        CHECK(a.row_index.front().derivative.size() == N);
      }
  }
}

TEST_CASE("alpha examples") {
  const auto single = corpus::make(corpus::kSinglePoint);
  for (unsigned m = 1; m <= 5; ++m) CHECK(alpha_symbolic(single, m).alpha == m);

  const auto three = corpus::make(corpus::kSeed42);
  CHECK(alpha_symbolic(three, 1).alpha == 2);
  CHECK(alpha_symbolic(three, 2).alpha == 3);

  const auto five = corpus::make(corpus::kFiveSeed7);
  CHECK(alpha_symbolic(five, 1).alpha == 2);
  const auto a2 = alpha_symbolic(five, 2, exact_opts());
  CHECK(a2.alpha == 4);
  CHECK(a2.certificate.certified);
  CHECK(a2.certificate.kernel_dimension > 0);
  CHECK(a2.certificate.rank_below == a2.certificate.columns_below);
  CHECK(kernel_dim(five, 2, 3, ConditionsMode::affine) == 0);
}

TEST_CASE("alpha agrees with the derivative oracle on the corpus") {
  // Frozen from the oracle; recomputed here for the small cases.
  const std::map<std::string, std::vector<unsigned>> frozen = {
      {"coord3", {2, 3, 5}},   {"collinear3", {1, 2, 3}}, {"seed42", {2, 3, 5}},
      {"five_seed7", {2, 4, 6}}, {"five_seed11", {2, 4, 6}}, {"six_seed5", {3, 5, 8}},
      {"star4", {3, 4, 7}},    {"coordP3", {2, 3, 4}},    {"single", {1, 2, 3}},
      {"four_with_collinear", {2, 4, 5}},
  };
  for (const auto& e : corpus::all()) {
    const auto cfg = corpus::make(e);
    const auto& want = frozen.at(e.name);
    for (unsigned m = 1; m <= 3; ++m) {
      CAPTURE(e.name);
      CAPTURE(m);
      const auto got = alpha_symbolic(cfg, m, exact_opts()).alpha;
      CHECK(got == want[m - 1]);
      if (cfg.size() <= 4 && m <= 2) CHECK(got == oracle::alpha(e.coords, m));
      CHECK(got == alpha_symbolic(cfg, m, exact_opts(ConditionsMode::homogeneous)).alpha);
      CHECK(got == alpha_symbolic(cfg, m).alpha);
    }
  }
}

TEST_CASE("kernel dimensions match the oracle") {
  for (const auto& e : corpus::all()) {
    const auto cfg = corpus::make(e);
    for (unsigned m = 1; m <= 2; ++m)
      for (unsigned t = m; t <= m + 2; ++t) {
        CAPTURE(e.name);
        CAPTURE(m);
        CAPTURE(t);
        const auto k = kernel_dim(cfg, m, t, ConditionsMode::affine);
        CHECK(k == kernel_dim(cfg, m, t, ConditionsMode::homogeneous));
        CHECK(k == oracle::kernel_dimension(e.coords, m, t));
      }
  }
}

TEST_CASE("kernel is monotone in the degree and bounded by pigeonhole") {
  for (const auto& e : corpus::all()) {
    const auto cfg = corpus::make(e);
    for (unsigned m = 1; m <= 3; ++m) {
      const unsigned a = alpha_symbolic(cfg, m, exact_opts()).alpha;
      const unsigned a1 = alpha_symbolic(cfg, 1, exact_opts()).alpha;
      CHECK(m <= a);
      CHECK(a <= m * a1);
      CHECK(a <= pigeonhole_degree(cfg.size(), cfg.N, m));
      CHECK(kernel_dim(cfg, m, a - 1, ConditionsMode::affine) == 0);
      for (unsigned t = a; t <= a + 2; ++t) CHECK(kernel_dim(cfg, m, t, ConditionsMode::affine) > 0);
    }
  }
}

TEST_CASE("pigeonhole degree") {
  // 3 points, m = 2 in P^2: 3 * 4 = 12 < binom(t + 2, 2) first at t = 4.
  CHECK(pigeonhole_degree(3, 2, 2) == 4);
  CHECK(pigeonhole_degree(1, 2, 1) == 1);
}

TEST_CASE("subadditivity and subset monotonicity") {
  for (const auto& e : corpus::all()) {
    const auto table = alpha_table(corpus::make(e), 4, exact_opts());
    for (const auto& [t, rt] : table.entries)
      for (const auto& [tq, rtq] : table.entries)
        if (tq % t == 0) CHECK(corpus::frac(rtq.alpha, tq) <= corpus::frac(rt.alpha, t));
  }
  const auto six = corpus::make(corpus::kSixSeed5);
  auto prefix = [&](std::size_t k) {
    PointConfig sub = six;
    sub.points.erase(sub.points.begin() + k, sub.points.end());
    return sub;
  };
  for (std::size_t k = 2; k <= six.size(); ++k)
    for (unsigned m = 1; m <= 2; ++m)
      CHECK(alpha_symbolic(prefix(k - 1), m).alpha <= alpha_symbolic(prefix(k), m).alpha);
}

TEST_CASE("alpha matches the monomial symbolic power on coordinate points") {
  const std::vector<unsigned> p2 = {2, 3, 5, 6}, p3 = {2, 3, 4, 6};
  for (std::size_t N : {2u, 3u}) {
    PointConfig cfg;
    cfg.N = N;
    for (std::size_t i = 0; i <= N; ++i) {
      std::vector<Rational> c(N + 1);
      c[i] = 1;
      cfg.points.emplace_back(c);
    }
    const auto ideal = coordinate_points_ideal(N);
    for (unsigned m = 1; m <= 4; ++m) {
      const auto a = alpha_symbolic(cfg, m, exact_opts()).alpha;
      CHECK(a == alpha_monomial(symbolic_power(ideal, m)));
      CHECK(a == oracle::coordinate_points_alpha(N, m));
      CHECK(a == (N == 2 ? p2 : p3)[m - 1]);
    }
  }
}

TEST_CASE("graded pieces") {
  const auto coord = corpus::make(corpus::kCoord3);
  const auto g = graded_piece(coord, 2, 3);
  REQUIRE(g.dimension() == 1);
  CHECK(g.forms[0] == monomial_vector(3, 3, {1, 1, 1}));
  CHECK(graded_piece(coord, 2, 3, ConditionsMode::homogeneous).forms == g.forms);

  for (const auto& e : corpus::all()) CHECK(graded_piece(corpus::make(e), 2, 1).empty());
  CHECK(graded_piece(corpus::make(corpus::kFiveSeed7), 1, 2).dimension() == 1);
}

TEST_CASE("Hilbert functions") {
  CHECK(hilbert_function_until_stable(corpus::make(corpus::kCoord3)) == std::vector<std::size_t>{1, 3});
  CHECK(is_generic_position(corpus::make(corpus::kCoord3)));
  CHECK(hilbert_function_until_stable(corpus::make(corpus::kCollinear3)) ==
        std::vector<std::size_t>{1, 2, 3});
  CHECK_FALSE(is_generic_position(corpus::make(corpus::kCollinear3)));
  CHECK(hilbert_function_until_stable(corpus::make(corpus::kSinglePoint)) == std::vector<std::size_t>{1});
  CHECK(is_generic_position(corpus::make(corpus::kSinglePoint)));

  for (const auto& e : corpus::all()) {
    const auto cfg = corpus::make(e);
    for (unsigned d = 0; d <= 3; ++d) CHECK(hilbert_function(cfg, d) == oracle::hilbert(e.coords, d));
  }
}

TEST_CASE("minimal generators") {
  const auto coord = minimal_generators_up_to(corpus::make(corpus::kCoord3), 2);
  CHECK(coord.count_in_degree(0) == 0);
  CHECK(coord.count_in_degree(1) == 0);
  REQUIRE(coord.count_in_degree(2) == 3);
  const std::vector<std::vector<Rational>> squarefree = {
      monomial_vector(3, 2, {1, 1, 0}), monomial_vector(3, 2, {1, 0, 1}), monomial_vector(3, 2, {0, 1, 1})};
  CHECK(span_contains(coord.generators[2].forms, squarefree, 6));
  CHECK(span_contains(squarefree, coord.generators[2].forms, 6));

  const auto single = minimal_generators_up_to(corpus::make(corpus::kSinglePoint), 1);
  REQUIRE(single.count_in_degree(1) == 2);
  const std::vector<std::vector<Rational>> lines = {monomial_vector(3, 1, {0, 1, 0}),
                                                    monomial_vector(3, 1, {0, 0, 1})};
  CHECK(span_contains(lines, single.generators[1].forms, 3));

  const auto five = minimal_generators_up_to(corpus::make(corpus::kFiveSeed7), 3);
  CHECK(five.count_in_degree(2) == 1);
  CHECK(five.count_in_degree(3) == 2);
  CHECK(five.total() == 3);
  CHECK(five.pieces[3].dimension() == 5);
}

TEST_CASE("graded pieces of products") {
  const auto coord = corpus::make(corpus::kCoord3);
  const auto I = minimal_generators_up_to(coord, 4);
  const auto M = irrelevant_ideal(3, 4);
  CHECK(product_piece({{&M, 1}, {&I, 1}}, 3).dimension() == 7);
  CHECK(product_piece({{&I, 2}}, 4).dimension() == 6);
  for (unsigned d = 0; d <= 4; ++d) {
    const auto p = product_piece({{&M, 0}, {&I, 1}}, d);
    CHECK(p.dimension() == I.pieces[d].dimension());
    CHECK(span_contains(p.forms, I.pieces[d].forms, binomial(d + 2, 2).get_ui()));
  }
  const auto short_gens = minimal_generators_up_to(coord, 1);
  CHECK_THROWS_AS(product_piece({{&short_gens, 1}}, 3), InsufficientGenerators);
  CHECK_THROWS_AS(product_piece({}, 3), InvalidArgument);
}

TEST_CASE("mode names round trip") {
  CHECK(parse_conditions_mode("affine") == ConditionsMode::affine);
  CHECK(parse_conditions_mode("homogeneous") == ConditionsMode::homogeneous);
  CHECK_THROWS_AS(parse_conditions_mode("projective"), InvalidArgument);
}
