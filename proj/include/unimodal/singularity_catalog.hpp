#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "unimodal/exact_poly.hpp"

namespace unimodal {

enum class SingularityKind { A, D, E6, E7, E8 };

/// A simple (ADE) singularity. `parameter` is k for A_k, m for D_m and
/// 6, 7, 8 for the exceptional ones.
struct SimpleSingularity {
  SingularityKind kind = SingularityKind::A;
  int parameter = 1;

  static SimpleSingularity A(int k);
  static SimpleSingularity D(int m);
  static SimpleSingularity E6() { return {SingularityKind::E6, 6}; }
  static SimpleSingularity E7() { return {SingularityKind::E7, 7}; }
  static SimpleSingularity E8() { return {SingularityKind::E8, 8}; }

  /// Dimension of the moduli algebra.
  int milnor_number() const { return parameter; }
  std::string to_string() const;

  friend auto operator<=>(const SimpleSingularity&, const SimpleSingularity&) = default;
};

struct Summand {
  SimpleSingularity singularity;
  int weight = 1;

  friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// Nonempty multiset of weighted simple singularities, kept sorted by
/// (kind, parameter, weight).
class SingularitySpec {
 public:
  explicit SingularitySpec(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const noexcept { return summands_; }
  bool unit_weights() const;
  /// Canonical text, e.g. "A2+D10+2*E7" or "A2@2+E7".
  std::string to_string() const;

  friend bool operator==(const SingularitySpec&, const SingularitySpec&) = default;

 private:
  std::vector<Summand> summands_;
};

struct CatalogLimits {
  int max_parameter = 10000;
};

/// Parses `[count*]kind[@weight] (+ ...)`; kinds are A<k>, D<m>, E6, E7, E8.
/// Throws SyntaxError (with a 0-based character position) or ParameterOutOfRange.
SingularitySpec parse_spec(std::string_view text, const CatalogLimits& limits = {});

/// Same grammar, but returns the summands in the order written (multipliers
/// expanded). Used to attach positional weight lists.
std::vector<Summand> parse_summands(std::string_view text, const CatalogLimits& limits = {});

/// P(S) of the moduli algebra under the quasihomogeneous weights.
Polynomial poincare_algebra(const SimpleSingularity& s);
/// P_L(S) of the derivation Lie algebra; zero for A_1.
Polynomial poincare_lie(const SimpleSingularity& s);

/// prod_j P(S_j)(t^{w_j}).
Polynomial combined_algebra(const SingularitySpec& spec);
/// sum_j P_L(S_j)(t^{w_j}) prod_{i != j} P(S_i)(t^{w_i}), without division.
Polynomial combined_lie(const SingularitySpec& spec);

/// Reduced quotient num/den: gcd(num, den) = 1, den has positive leading
/// coefficient, and the integer contents share no factor.
struct RationalFn {
  Polynomial num;
  Polynomial den;

  Rational eval(const Rational& x) const;
};

RationalFn reduce(const Polynomial& num, const Polynomial& den);

/// Q(t) = sum_j P_L(S_j)/P(S_j) (weights applied), reduced.
RationalFn q_rational(const SingularitySpec& spec);

enum class TheoremScope { A_D, A_D_E7, out_of_scope };

/// A_D: only A/D summands; A_D_E7: A/D plus at least one E7; unit weights in both.
TheoremScope theorem_scope(const SingularitySpec& spec);
std::string to_string(TheoremScope scope);

}  // namespace unimodal
