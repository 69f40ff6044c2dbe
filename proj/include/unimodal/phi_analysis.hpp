#pragma once

#include <string>
#include <vector>

#include "unimodal/exact_poly.hpp"
#include "unimodal/singularity_catalog.hpp"

namespace unimodal {

/// One summand's contribution to phi(x) = t Q(t) at t = e^{2ix}:
///   A_k:  sin((2k-2)x) / sin(2kx)
///   D_m:  cos((m-4)x) / cos((m-2)x)
///   E_7:  2 sin(4x) cos(x) / sin(7x)
struct PhiTerm {
  enum class Kind { A, D, E7 };
  Kind kind = Kind::A;
  int parameter = 2;

  long double value(long double x) const;
  std::string to_string() const;

  friend bool operator==(const PhiTerm&, const PhiTerm&) = default;
};

/// sin(angle * pi) or cos(angle * pi) with a rational angle.
struct TrigFactor {
  enum class Fn { sin, cos };
  Fn fn = Fn::sin;
  Rational angle;

  /// Exact sign by reducing the angle to [0, 2) and reading off the quadrant.
  int sign() const;
  long double value() const;
};

/// coefficient * prod(factors): a residue in closed form.
struct ResidueTerm {
  Rational coefficient;
  std::vector<TrigFactor> factors;

  int sign() const;
  long double value() const;
  std::string to_string() const;
};

struct Pole {
  /// Location as a multiple of pi, strictly inside (0, 1/2).
  Rational location;
  std::vector<PhiTerm> sources;
  /// One closed-form residue per source; the pole's residue is their sum.
  std::vector<ResidueTerm> residue_terms;
  int residue_sign = 0;
  long double residue_value = 0;
  /// True when the sign of a merged residue with mixed-sign contributions was
  /// certified numerically rather than by quadrant analysis.
  bool sign_certified_numerically = false;
};

/// Terms for a spec made of A_k, D_m and E_7 summands with unit weights;
/// A_1 contributes nothing. Throws UnsupportedSummand otherwise.
std::vector<PhiTerm> build_phi(const SingularitySpec& spec);

/// Poles of the term sum in (0, pi/2), sorted, with removable points dropped and
/// coincident poles merged. Throws PoleCollision when a merged residue's sign
/// cannot be certified.
std::vector<Pole> poles_in_interval(const std::vector<PhiTerm>& terms);

long double evaluate_phi(const std::vector<PhiTerm>& terms, long double x);

struct EndpointValues {
  Rational phi_at_zero;
  Rational phi_at_half_pi;
};

/// phi(0) = Q(1), phi(pi/2) = -Q(-1), summed from each summand's reduced ratio.
EndpointValues endpoint_values(const SingularitySpec& spec);

/// Sign of phi just inside the endpoint (x -> 0+ or x -> pi/2-), which is the
/// sign of the endpoint value when that is nonzero. Computed exactly from the
/// order of vanishing of Q at t = 1 or t = -1.
int endpoint_side_sign(const RationalFn& q, bool at_zero);

struct ZeroCount {
  int count = 0;
  /// Local minima of |phi| that approach zero without a sign change.
  int suspected_touch = 0;
  std::vector<long double> zeros;
};

struct ZeroCountOptions {
  int initial_samples = 64;
  int max_samples = 1 << 20;
};

/// Counts sign changes of phi on (0, pi/2) between consecutive poles on a
/// doubling grid, then refines each by bisection. Throws Unstable.
ZeroCount count_zeros_numeric(const std::vector<PhiTerm>& terms, const std::vector<Pole>& poles,
                              const ZeroCountOptions& options = {});

struct PhiReport {
  std::vector<Pole> poles;
  int n_plus = 0;
  int n_minus = 0;
  Rational phi_at_zero;
  Rational phi_at_half_pi;
  int sign_at_zero = 0;
  int sign_at_half_pi = 0;
  int c = 0;
  int zero_lower_bound = 0;
  int numeric_zero_count = 0;
  int suspected_touch_zeros = 0;
  std::vector<long double> zeros;
};

PhiReport zero_bound_report(const SingularitySpec& spec);

}  // namespace unimodal
