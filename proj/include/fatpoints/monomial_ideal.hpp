#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoints {

struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree ascending, then lexicographically descending.
bool deglex_less(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// Requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);

/// A monomial ideal held by its minimal generators in deglex order. The zero
/// ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators);

  static MonomialIdeal zero(std::vector<std::string> variables);
  static MonomialIdeal unit(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const std::vector<Monomial>& generators() const { return generators_; }

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  /// Parses products such as "x^2*t*u^3"; "1" is the unit monomial.
  Monomial parse_monomial(std::string_view text) const;
  std::string format(const Monomial& w) const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> generators_;
};

/// Removes every monomial divisible by another; sorts deglex; drops duplicates.
MonomialIdeal minimalize(std::vector<std::string> variables, std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned e);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& w);
MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

bool contains_monomial(const MonomialIdeal& a, const Monomial& w);
/// a ⊇ b.
bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

/// A prime generated by a nonempty subset of the variables, as sorted indices.
struct MonomialPrime {
  std::vector<std::size_t> variables;

  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
};

MonomialIdeal prime_ideal(const std::vector<std::string>& variables, const MonomialPrime& p);
MonomialIdeal maximal_ideal(const std::vector<std::string>& variables);
std::string format_prime(const std::vector<std::string>& variables, const MonomialPrime& p);

/// Sets every variable outside p to 1; for monomial ideals this is I R_p ∩ R.
MonomialIdeal localize_contract(const MonomialIdeal& a, const MonomialPrime& p);

enum class AssMode { maxideal_only, bounded_witness };

struct AssociatedPrimes {
  std::vector<MonomialPrime> primes;
  /// Each prime paired with a monomial w realizing it as colon(I, w).
  std::vector<Monomial> witnesses;
  bool maximal_ideal_associated = false;
  /// The prime list is complete under `assumption`.
  bool complete = false;
  std::string assumption;
};

/// Throws InvalidArgument for the zero or unit ideal.
AssociatedPrimes ass_primes(const MonomialIdeal& a, AssMode mode);

/// Intersection over `primes` (default: the associated primes of a) of
/// localize_contract(a^m, p).
MonomialIdeal symbolic_power(const MonomialIdeal& a, unsigned m,
                             std::optional<std::vector<MonomialPrime>> primes = std::nullopt);

/// Least generator degree; throws InvalidArgument for the zero ideal.
unsigned alpha_monomial(const MonomialIdeal& a);

/// Intersection of the primes (x_j : j != i), i = 0..N, in variables x0..xN.
MonomialIdeal coordinate_points_ideal(std::size_t N);

struct CounterexampleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct CounterexampleReport {
  MonomialIdeal J;
  std::vector<CounterexampleCheck> checks;
  std::optional<Monomial> z;
  std::vector<MonomialPrime> ass_J2;
  std::size_t J2_generators = 0;
  std::size_t J4_generators = 0;
  std::size_t symbolic_square_of_J2_generators = 0;
  bool conclusion = false;

  bool all_passed() const;
};

/// J = J1 J2 in k[x,t,u,v] with J1 = (x^4, x^3u, xu^3, u^4, x^2u^2v),
/// J2 = (t^3, tuv, u^2v).
MonomialIdeal counterexample_ideal();

/// Shows (J^(2))^(2) != J^(4) via socle witnesses and localization.
CounterexampleReport verify_counterexample();

}  // namespace fatpoints
