#include "fatpoints/monomial_ideal.hpp"

#include "fatpoints/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace fatpoints {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

bool deglex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents > b.exponents;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) {
    out.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  }
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) {
    out.exponents[i] = std::min(a.exponents[i], b.exponents[i]);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += b.exponents[i];
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) {
    if (b.exponents[i] > a.exponents[i]) throw InvalidArgument("monomial division is not exact");
    out.exponents[i] -= b.exponents[i];
  }
  return out;
}

MonomialIdeal minimalize(std::vector<std::string> variables, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.exponents.size() != variables.size()) {
      throw VariableMismatch("monomial has " + std::to_string(g.exponents.size()) +
                             " exponents for " + std::to_string(variables.size()) + " variables");
    }
  }
  std::sort(gens.begin(), gens.end(), deglex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return MonomialIdeal(std::move(variables), std::move(kept));
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators)
    : variables_(std::move(variables)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.exponents.size() != variables_.size()) {
      throw VariableMismatch("generator length does not match the variable list");
    }
  }
  std::sort(generators_.begin(), generators_.end(), deglex_less);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (i != j && generators_[i].divides(generators_[j])) {
        *this = minimalize(std::move(variables_), std::move(generators_));
        return;
      }
    }
  }
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> variables) {
  return MonomialIdeal(std::move(variables), {});
}

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> variables) {
  const std::size_t n = variables.size();
  return MonomialIdeal(std::move(variables), {Monomial{std::vector<unsigned>(n, 0)}});
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && generators_.front().degree() == 0;
}

Monomial MonomialIdeal::parse_monomial(std::string_view text) const {
  Monomial w{std::vector<unsigned>(variables_.size(), 0)};
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "1") return w;
  while (!text.empty()) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    unsigned e = 1;
    const auto caret = factor.find('^');
    std::string_view name = factor;
    if (caret != std::string_view::npos) {
      name = trim(factor.substr(0, caret));
      const auto digits = trim(factor.substr(caret + 1));
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw InvalidArgument("bad exponent in '" + std::string(factor) + "'");
      }
    }
    const auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
    w.exponents[it - variables_.begin()] += e;
  }
  return w;
}

std::string MonomialIdeal::format(const Monomial& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.exponents.size(); ++i) {
    if (w.exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variables_[i];
    if (w.exponents[i] > 1) out += "^" + std::to_string(w.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += format(generators_[i]);
  }
  return out + ")";
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.variables() != b.variables()) throw VariableMismatch("ideals live in different rings");
}

}  // namespace

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g * h);
  return minimalize(a.variables(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned e) {
  MonomialIdeal out = MonomialIdeal::unit(a.variables());
  for (unsigned i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return minimalize(a.variables(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& w) {
  if (w.exponents.size() != a.nvars()) throw VariableMismatch("monomial length mismatch");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) gens.push_back(g / gcd(g, w));
  return minimalize(a.variables(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  MonomialIdeal out = MonomialIdeal::unit(a.variables());
  for (const auto& g : b.generators()) out = intersect(out, colon(a, g));
  return out;
}

bool contains_monomial(const MonomialIdeal& a, const Monomial& w) {
  if (w.exponents.size() != a.nvars()) throw VariableMismatch("monomial length mismatch");
  return std::any_of(a.generators().begin(), a.generators().end(),
                     [&](const Monomial& g) { return g.divides(w); });
}

bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Monomial& g) { return contains_monomial(a, g); });
}

MonomialIdeal prime_ideal(const std::vector<std::string>& variables, const MonomialPrime& p) {
  std::vector<Monomial> gens;
  for (auto i : p.variables) {
    Monomial w{std::vector<unsigned>(variables.size(), 0)};
    w.exponents.at(i) = 1;
    gens.push_back(std::move(w));
  }
  return minimalize(variables, std::move(gens));
}

MonomialIdeal maximal_ideal(const std::vector<std::string>& variables) {
  MonomialPrime all;
  for (std::size_t i = 0; i < variables.size(); ++i) all.variables.push_back(i);
  return prime_ideal(variables, all);
}

std::string format_prime(const std::vector<std::string>& variables, const MonomialPrime& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.variables.size(); ++i) {
    if (i) out += ", ";
    out += variables.at(p.variables[i]);
  }
  return out + ")";
}

MonomialIdeal localize_contract(const MonomialIdeal& a, const MonomialPrime& p) {
  std::vector<bool> keep(a.nvars(), false);
  for (auto i : p.variables) {
    if (i >= a.nvars()) throw InvalidArgument("prime variable outside the ring");
    keep[i] = true;
  }
  std::vector<Monomial> gens = a.generators();
  for (auto& g : gens)
    for (std::size_t i = 0; i < g.exponents.size(); ++i)
      if (!keep[i]) g.exponents[i] = 0;
  return minimalize(a.variables(), std::move(gens));
}

namespace {

std::optional<MonomialPrime> as_prime(const MonomialIdeal& a) {
  if (a.is_zero() || a.is_unit()) return std::nullopt;
  MonomialPrime p;
  for (const auto& g : a.generators()) {
    if (g.degree() != 1) return std::nullopt;
    p.variables.push_back(std::find(g.exponents.begin(), g.exponents.end(), 1u) - g.exponents.begin());
  }
  std::sort(p.variables.begin(), p.variables.end());
  return p;
}

}  // namespace

AssociatedPrimes ass_primes(const MonomialIdeal& a, AssMode mode) {
  if (a.is_zero() || a.is_unit()) {
    throw InvalidArgument("associated primes need a nonzero proper ideal");
  }
  AssociatedPrimes out;
  const MonomialIdeal M = maximal_ideal(a.variables());

  if (mode == AssMode::maxideal_only) {
    const MonomialIdeal socle = colon_ideal(a, M);
    out.maximal_ideal_associated = socle != a;
    if (out.maximal_ideal_associated) {
      out.primes.push_back(*as_prime(M));
      for (const auto& g : socle.generators()) {
        if (!contains_monomial(a, g)) {
          out.witnesses.push_back(g);
          break;
        }
      }
    }
    out.complete = false;
    out.assumption = "only the maximal ideal was tested, via (I : M) != I";
    return out;
  }

  std::vector<unsigned> bound(a.nvars(), 0);
  for (const auto& g : a.generators())
    for (std::size_t i = 0; i < bound.size(); ++i) bound[i] = std::max(bound[i], g.exponents[i]);

  // Every exponent vector w with w <= bound, visited in deglex order so that
  // each prime is paired with a least witness.
  std::vector<Monomial> candidates;
  Monomial w{std::vector<unsigned>(a.nvars(), 0)};
  while (true) {
    candidates.push_back(w);
    std::size_t i = 0;
    while (i < w.exponents.size() && w.exponents[i] == bound[i]) w.exponents[i++] = 0;
    if (i == w.exponents.size()) break;
    ++w.exponents[i];
  }
  std::sort(candidates.begin(), candidates.end(), deglex_less);

  std::map<MonomialPrime, Monomial> found;
  for (const auto& c : candidates) {
    if (contains_monomial(a, c)) continue;
    auto p = as_prime(colon(a, c));
    if (p && !found.count(*p)) found.emplace(std::move(*p), c);
  }
  for (auto& [p, witness] : found) {
    out.maximal_ideal_associated =
        out.maximal_ideal_associated || p.variables.size() == a.nvars();
    out.primes.push_back(p);
    out.witnesses.push_back(witness);
  }
  out.complete = true;
  out.assumption =
      "witnesses range over divisors of x^a, a the componentwise maximum generator exponent; "
      "(I : w) depends only on min(w, a), so every colon ideal of a monomial is realized";
  return out;
}

MonomialIdeal symbolic_power(const MonomialIdeal& a, unsigned m,
                             std::optional<std::vector<MonomialPrime>> primes) {
  if (m < 1) throw InvalidArgument("symbolic power exponent must be >= 1");
  if (!primes) primes = ass_primes(a, AssMode::bounded_witness).primes;
  if (primes->empty()) throw InvalidArgument("symbolic power needs at least one prime");
  const MonomialIdeal am = power(a, m);
  std::optional<MonomialIdeal> out;
  for (const auto& p : *primes) {
    MonomialIdeal component = localize_contract(am, p);
    out = out ? intersect(*out, component) : std::move(component);
  }
  return *out;
}

unsigned alpha_monomial(const MonomialIdeal& a) {
  if (a.is_zero()) throw InvalidArgument("the zero ideal has no initial degree");
  return a.generators().front().degree();
}

MonomialIdeal coordinate_points_ideal(std::size_t N) {
  if (N < 1) throw InvalidArgument("coordinate points need N >= 1");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i <= N; ++i) vars.push_back("x" + std::to_string(i));
  std::optional<MonomialIdeal> out;
  for (std::size_t i = 0; i <= N; ++i) {
    MonomialPrime p;
    for (std::size_t j = 0; j <= N; ++j)
      if (j != i) p.variables.push_back(j);
    MonomialIdeal q = prime_ideal(vars, p);
    out = out ? intersect(*out, q) : std::move(q);
  }
  return *out;
}

bool CounterexampleReport::all_passed() const {
  return conclusion && std::all_of(checks.begin(), checks.end(),
                                   [](const CounterexampleCheck& c) { return c.passed; });
}

MonomialIdeal counterexample_ideal() {
  const std::vector<std::string> vars{"x", "t", "u", "v"};
  const MonomialIdeal shell = MonomialIdeal::zero(vars);
  auto gens = [&](std::initializer_list<std::string_view> texts) {
    std::vector<Monomial> out;
    for (auto t : texts) out.push_back(shell.parse_monomial(t));
    return minimalize(vars, std::move(out));
  };
  const MonomialIdeal J1 = gens({"x^4", "x^3*u", "x*u^3", "u^4", "x^2*u^2*v"});
  const MonomialIdeal J2 = gens({"t^3", "t*u*v", "u^2*v"});
  return multiply(J1, J2);
}

CounterexampleReport verify_counterexample() {
  CounterexampleReport report;
  const MonomialIdeal J = counterexample_ideal();
  report.J = J;
  const MonomialIdeal M = maximal_ideal(J.variables());
  const MonomialIdeal J2 = power(J, 2);
  const MonomialIdeal J4 = power(J, 4);
  report.J2_generators = J2.generators().size();
  report.J4_generators = J4.generators().size();

  {
    CounterexampleCheck c{"socle element of R/J", false, {}, {}};
    const Monomial y = J.parse_monomial("x^2*t^2*u^3*v");
    const bool outside = !contains_monomial(J, y);
    const MonomialIdeal q = colon(J, y);
    c.passed = outside && q == M;
    c.detail = std::string("y ") + (outside ? "not in" : "in") + " J; (J : y) = " + q.to_string();
    c.witnesses.push_back(J.format(y));
    report.checks.push_back(std::move(c));
  }
  {
    CounterexampleCheck c{"maximal ideal not associated to J^2", false, {}, {}};
    const MonomialIdeal q = colon_ideal(J2, M);
    c.passed = q == J2;
    c.detail = "(J^2 : M) " + std::string(c.passed ? "equals" : "differs from") + " J^2 (" +
               std::to_string(J2.generators().size()) + " generators)";
    report.checks.push_back(std::move(c));
  }

  std::vector<Monomial> socle_candidates;
  {
    CounterexampleCheck c{"maximal ideal associated to J^4", false, {}, {}};
    const MonomialIdeal q = colon_ideal(J4, M);
    for (const auto& g : q.generators())
      if (!contains_monomial(J4, g)) socle_candidates.push_back(g);
    c.passed = q != J4 && !socle_candidates.empty();
    c.detail = std::to_string(socle_candidates.size()) +
               " generators of (J^4 : M) lie outside J^4";
    if (!socle_candidates.empty()) c.witnesses.push_back(J.format(socle_candidates.front()));
    report.checks.push_back(std::move(c));
  }
  {
    CounterexampleCheck c{"z in (J^(2))^(2) but not in J^(4)", false, {}, {}};
    const MonomialIdeal J_sym2 = symbolic_power(J, 2);
    const auto ass = ass_primes(J_sym2, AssMode::bounded_witness);
    report.ass_J2 = ass.primes;
    const MonomialIdeal S = symbolic_power(J_sym2, 2, ass.primes);
    report.symbolic_square_of_J2_generators = S.generators().size();
    const MonomialIdeal J_sym4 = symbolic_power(J, 4);
    for (const auto& cand : socle_candidates) {
      if (contains_monomial(S, cand) && !contains_monomial(J_sym4, cand)) {
        report.z = cand;
        break;
      }
    }
    const bool sym_equal_ordinary = J_sym2 == J2 && J_sym4 == J4;
    c.passed = report.z.has_value() && sym_equal_ordinary && !ass.maximal_ideal_associated;
    c.detail = "J^(2) = J^2 and J^(4) = J^4: " + std::string(sym_equal_ordinary ? "yes" : "no") +
               "; |Ass(R/J^2)| = " + std::to_string(ass.primes.size()) +
               "; (J^(2))^(2) has " + std::to_string(S.generators().size()) + " generators";
    if (report.z) c.witnesses.push_back(J.format(*report.z));
    report.checks.push_back(std::move(c));
  }
  report.conclusion = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const CounterexampleCheck& c) { return c.passed; });
  return report;
}

}  // namespace fatpoints
