#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unimodal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// coeffs()[i] is the coefficient of t^i. Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> coeffs);
  explicit Polynomial(std::vector<Integer> coeffs);

  static Polynomial constant(const Integer& c);
  static Polynomial monomial(const Integer& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// Degree of a nonzero polynomial; throws ZeroPolynomial otherwise.
  std::size_t deg() const;
  const Integer& leading() const;
  /// Coefficient of t^i, zero past the degree.
  Integer coeff(std::size_t i) const;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;
  /// Sign of p(x) for rational x, computed without forming the rational value.
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;
  Integer content() const;
  /// p / content(p), with the sign chosen so the leading coefficient is positive.
  Polynomial primitive_part() const;
  /// t^deg p(1/t) as a coefficient sequence.
  Polynomial reversed() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const Integer& c);
  /// Divides every coefficient by c; throws NotDivisible if any is not a multiple.
  Polynomial& divide_by_scalar(const Integer& c);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form, e.g. "1 + 2t^2 - t^3".
  std::string to_string(char variable = 't') const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

Polynomial operator+(Polynomial p, const Polynomial& q);
Polynomial operator-(Polynomial p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(Polynomial p, const Integer& c);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Returns r with r * q == p. Throws DivisionByZero or NotDivisible.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);

/// lc(q)^(deg p - deg q + 1) * p mod q.
Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& q);

/// p(t^w).
Polynomial substitute_power(const Polynomial& p, unsigned w);

bool is_palindromic(const Polynomial& p);

/// Primitive gcd with positive leading coefficient (subresultant remainder sequence).
Polynomial gcd(const Polynomial& p, const Polynomial& q);

struct SquareFreePart {
  Polynomial factor;
  unsigned multiplicity;

  friend bool operator==(const SquareFreePart&, const SquareFreePart&) = default;
};

/// input == content * prod(factor^multiplicity). Parts are primitive, square-free,
/// pairwise coprime, have positive leading coefficient and ascending multiplicity.
struct SquareFreeDecomposition {
  Integer content;
  std::vector<SquareFreePart> parts;
};

SquareFreeDecomposition squarefree(const Polynomial& p);

/// For palindromic p of degree 2d returns q of degree d with p(t) = t^d q(t + 1/t).
Polynomial to_symmetric(const Polynomial& p);

/// Primitive Sturm chain q, q', -rem, ... (each member scaled by a positive constant).
std::vector<Polynomial> sturm_chain(const Polynomial& q);

/// Number of distinct real roots of square-free q in the open interval (a, b).
std::size_t sturm_count(const Polynomial& q, const Rational& a, const Rational& b);

}  // namespace unimodal
