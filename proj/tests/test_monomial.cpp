#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "fatpoints/errors.hpp"
#include "fatpoints/monomial_ideal.hpp"

#include <random>

using namespace fatpoints;

namespace {

const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kX012 = {"x0", "x1", "x2"};

MonomialIdeal ideal(const std::vector<std::string>& vars, std::vector<std::vector<unsigned>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.push_back({std::move(g)});
  return MonomialIdeal(vars, std::move(ms));
}

std::vector<Monomial> monos(std::vector<std::vector<unsigned>> gens) {
  std::vector<Monomial> out;
  for (auto& g : gens) out.push_back({std::move(g)});
  return out;
}

std::vector<std::vector<unsigned>> exps(const MonomialIdeal& I) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& g : I.generators()) out.push_back(g.exponents);
  return out;
}

MonomialIdeal J1() {
  MonomialIdeal I({"x", "t", "u", "v"}, {});
  return MonomialIdeal(I.variables(), {I.parse_monomial("x^4"), I.parse_monomial("x^3*u"),
                                       I.parse_monomial("x*u^3"), I.parse_monomial("u^4"),
                                       I.parse_monomial("x^2*u^2*v")});
}

MonomialIdeal J2() {
  MonomialIdeal I({"x", "t", "u", "v"}, {});
  return MonomialIdeal(I.variables(), {I.parse_monomial("t^3"), I.parse_monomial("t*u*v"),
                                       I.parse_monomial("u^2*v")});
}

std::vector<MonomialIdeal> small_ideals() {
  return {
      ideal(kXY, {{1, 1}}),
      ideal(kXY, {{2, 0}, {1, 1}}),
      ideal(kXY, {{2, 0}, {0, 3}}),
      coordinate_points_ideal(2),
      ideal(kX012, {{1, 1, 0}, {0, 2, 1}, {3, 0, 0}}),
      ideal(kX012, {{2, 1, 0}, {0, 1, 2}}),
  };
}

std::vector<unsigned> random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> d(0, max_deg);
  std::uniform_int_distribution<std::size_t> v(0, nvars - 1);
  std::vector<unsigned> e(nvars, 0);
  for (unsigned k = d(rng); k > 0; --k) ++e[v(rng)];
  return e;
}

}  // namespace

TEST_CASE("minimalize") {
  CHECK(exps(minimalize(kXY, monos({{1, 0}, {1, 1}}))) == std::vector<std::vector<unsigned>>{{1, 0}});
  CHECK(exps(minimalize(kXY, monos({{2, 0}, {1, 1}, {0, 2}, {2, 1}}))) ==
        std::vector<std::vector<unsigned>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(minimalize(kXY, {}).is_zero());

  std::vector<Monomial> products;
  const auto j1 = J1(), j2 = J2();
  for (const auto& a : j1.generators())
    for (const auto& b : j2.generators()) products.push_back(a * b);
  CHECK(products.size() == 15);
  const auto J = minimalize(J1().variables(), products);
  CHECK(J == counterexample_ideal());
  for (const auto& g : J.generators())
    for (const auto& h : J.generators())
      if (!(g == h)) CHECK_FALSE(g.divides(h));
}

TEST_CASE("generator order is deglex") {
  const auto I = ideal(kX012, {{0, 0, 2}, {1, 1, 0}, {0, 3, 0}, {2, 0, 0}});
  CHECK(exps(I) == std::vector<std::vector<unsigned>>{{2, 0, 0}, {1, 1, 0}, {0, 0, 2}, {0, 3, 0}});
}

TEST_CASE("multiply and power") {
  CHECK(multiply(ideal(kXY, {{1, 0}}), ideal(kXY, {{0, 1}})) == ideal(kXY, {{1, 1}}));
  CHECK(power(ideal(kXY, {{1, 0}, {0, 1}}), 2) == ideal(kXY, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(power(ideal(kXY, {{1, 0}}), 0).is_unit());
  CHECK(alpha_monomial(multiply(J1(), J2())) == 7);
  CHECK_THROWS_AS(multiply(ideal(kXY, {{1, 0}}), ideal(kX012, {{1, 0, 0}})), VariableMismatch);
}

TEST_CASE("intersect") {
  CHECK(intersect(ideal(kXY, {{1, 0}}), ideal(kXY, {{0, 1}})) == ideal(kXY, {{1, 1}}));
  for (const auto& I : small_ideals()) CHECK(intersect(I, I) == I);

  auto sq = [](std::vector<unsigned> a, std::vector<unsigned> b) {
    return power(ideal(kX012, {std::move(a), std::move(b)}), 2);
  };
  const auto I = intersect(intersect(sq({0, 1, 0}, {0, 0, 1}), sq({1, 0, 0}, {0, 0, 1})),
                           sq({1, 0, 0}, {0, 1, 0}));
  CHECK(alpha_monomial(I) == 3);
  CHECK(contains_monomial(I, Monomial{{1, 1, 1}}));
  for (const auto& e : oracle::exponents(3, 2)) CHECK_FALSE(contains_monomial(I, Monomial{e}));
}

TEST_CASE("colon") {
  CHECK(colon(ideal(kXY, {{1, 1}}), Monomial{{1, 0}}) == ideal(kXY, {{0, 1}}));
  for (const auto& I : small_ideals()) CHECK(colon(I, Monomial{std::vector<unsigned>(I.nvars(), 0)}) == I);

  const auto J = counterexample_ideal();
  const auto y = J.parse_monomial("x^2*t^2*u^3*v");
  CHECK_FALSE(contains_monomial(J, y));
  CHECK(colon(J, y) == maximal_ideal(J.variables()));
}

TEST_CASE("membership agrees with brute force") {
  std::mt19937_64 rng(5);
  const auto ideals = small_ideals();
  for (const auto& I : ideals)
    for (const auto& K : ideals) {
      if (I.variables() != K.variables()) continue;
      const auto meet = intersect(I, K);
      for (int i = 0; i < 60; ++i) {
        const auto w = random_monomial(rng, I.nvars(), 12);
        const bool in_i = oracle::in_monomial_ideal(exps(I), w);
        const bool in_k = oracle::in_monomial_ideal(exps(K), w);
        CHECK(contains_monomial(I, Monomial{w}) == in_i);
        CHECK(contains_monomial(meet, Monomial{w}) == (in_i && in_k));
        const auto v = random_monomial(rng, I.nvars(), 6);
        std::vector<unsigned> wv(w.size());
        for (std::size_t k = 0; k < w.size(); ++k) wv[k] = w[k] + v[k];
        CHECK(contains_monomial(colon(I, Monomial{v}), Monomial{w}) == oracle::in_monomial_ideal(exps(I), wv));
      }
    }
}

TEST_CASE("localization") {
  const auto I = coordinate_points_ideal(2);
  CHECK(localize_contract(I, {{0, 1}}) == ideal(kX012, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(localize_contract(I, {{0, 1, 2}}) == I);

  const auto J = counterexample_ideal();
  const auto J4 = power(J, 4);
  const auto loc = localize_contract(J4, {{0, 2, 3}});
  for (const auto& g : loc.generators()) CHECK(g.exponents[1] == 0);
  CHECK(loc.generators().size() == 17);
}

TEST_CASE("associated primes") {
  const auto xy = ass_primes(ideal(kXY, {{1, 1}}), AssMode::bounded_witness);
  CHECK(xy.primes == std::vector<MonomialPrime>{{{0}}, {{1}}});
  CHECK(xy.complete);
  CHECK_FALSE(xy.assumption.empty());

  const auto emb = ass_primes(ideal(kXY, {{2, 0}, {1, 1}}), AssMode::bounded_witness);
  CHECK(emb.primes == std::vector<MonomialPrime>{{{0}}, {{0, 1}}});
  CHECK(emb.maximal_ideal_associated);
  for (std::size_t i = 0; i < emb.primes.size(); ++i)
    CHECK(colon(ideal(kXY, {{2, 0}, {1, 1}}), emb.witnesses[i]) == prime_ideal(kXY, emb.primes[i]));

  CHECK(ass_primes(counterexample_ideal(), AssMode::maxideal_only).maximal_ideal_associated);
  CHECK_THROWS_AS(ass_primes(MonomialIdeal::zero(kXY), AssMode::bounded_witness), InvalidArgument);
  CHECK_THROWS_AS(ass_primes(MonomialIdeal::unit(kXY), AssMode::maxideal_only), InvalidArgument);
}

TEST_CASE("symbolic powers") {
  const auto mx = ideal(kXY, {{1, 0}, {0, 1}});
  for (unsigned m = 1; m <= 4; ++m) CHECK(symbolic_power(mx, m) == power(mx, m));

  const auto J = counterexample_ideal();
  for (unsigned n = 1; n <= 4; ++n) CHECK(symbolic_power(J, n) == power(J, n));

  const auto C = coordinate_points_ideal(2);
  const auto C2 = symbolic_power(C, 2);
  CHECK(alpha_monomial(C2) == 3);
  CHECK(std::find(C2.generators().begin(), C2.generators().end(), Monomial{{1, 1, 1}}) !=
        C2.generators().end());
  CHECK(contains_monomial(C2, Monomial{{1, 1, 1}}));
  CHECK_FALSE(contains_monomial(power(C, 2), Monomial{{1, 1, 1}}));

  CHECK_THROWS_AS(symbolic_power(C, 2, std::vector<MonomialPrime>{}), InvalidArgument);
}

TEST_CASE("symbolic power chains") {
  for (const auto& I : small_ideals()) {
    CHECK(symbolic_power(I, 1) == I);
    MonomialIdeal prev = I;
    for (unsigned m = 1; m <= 4; ++m) {
      const auto S = symbolic_power(I, m);
      CHECK(contains_ideal(S, power(I, m)));
      CHECK(contains_ideal(I, S));
      CHECK(contains_ideal(prev, S));
      prev = S;
    }
  }
}

TEST_CASE("containments between iterated symbolic powers") {
  const auto J = counterexample_ideal();
  const auto J2s = symbolic_power(J, 2);
  CHECK(contains_ideal(symbolic_power(J2s, 2), symbolic_power(J, 4)));
  CHECK(contains_ideal(symbolic_power(J2s, 3), symbolic_power(J, 6)));
  CHECK(contains_ideal(power(J, 2), power(power(J, 2), 2)));
}

TEST_CASE("initial degrees and coordinate point ideals") {
  CHECK(alpha_monomial(coordinate_points_ideal(2)) == 2);
  CHECK(alpha_monomial(J1()) == 4);
  CHECK(alpha_monomial(counterexample_ideal()) == 7);
  CHECK_THROWS_AS(alpha_monomial(MonomialIdeal::zero(kXY)), InvalidArgument);

  CHECK(exps(coordinate_points_ideal(1)) == std::vector<std::vector<unsigned>>{{1, 1}});
  CHECK(exps(coordinate_points_ideal(2)) == std::vector<std::vector<unsigned>>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  const auto c3 = coordinate_points_ideal(3);
  CHECK(c3.generators().size() == 6);
  for (const auto& g : c3.generators()) CHECK(g.degree() == 2);
}

TEST_CASE("parsing and formatting") {
  const auto J = counterexample_ideal();
  const auto w = J.parse_monomial("x^2*t*u^3");
  CHECK(w.exponents == std::vector<unsigned>{2, 1, 3, 0});
  CHECK(J.format(w) == "x^2*t*u^3");
  CHECK(J.format(J.parse_monomial("1")) == "1");
  CHECK_THROWS_AS(J.parse_monomial("y^2"), InvalidArgument);
  CHECK_THROWS_AS(J.parse_monomial("x^"), InvalidArgument);
}

TEST_CASE("counterexample verification") {
  const auto r = verify_counterexample();
  REQUIRE(r.checks.size() == 4);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  CHECK(r.checks[0].witnesses == std::vector<std::string>{"x^2*t^2*u^3*v"});
  REQUIRE(r.z.has_value());
  CHECK(r.J.format(*r.z) == "x^15*t^6*u^4*v^2");
  const auto J4 = power(r.J, 4);
  CHECK_FALSE(contains_monomial(J4, *r.z));
  CHECK(contains_monomial(colon_ideal(J4, maximal_ideal(r.J.variables())), *r.z));
  CHECK(colon_ideal(power(r.J, 2), maximal_ideal(r.J.variables())) == power(r.J, 2));
  CHECK(r.J.generators().size() == 15);
  CHECK(r.J2_generators == 54);
  CHECK(r.J4_generators == 255);
  CHECK(r.conclusion);
  CHECK(r.all_passed());
}
