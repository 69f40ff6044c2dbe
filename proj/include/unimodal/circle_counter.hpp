#pragma once

#include <string>
#include <vector>

#include "unimodal/bigfloat.hpp"
#include "unimodal/exact_poly.hpp"

namespace unimodal {

/// Certified root census relative to the unit circle.
///
/// Roots at t = 1 and t = -1 are counted separately; the on-circle fields
/// exclude them. All counts are with multiplicity unless named "distinct".
struct CircleReport {
  int degree = 0;
  int at_one = 0;
  int at_minus_one = 0;
  int on_circle_with_mult = 0;
  int on_circle_distinct = 0;
  int off_circle_with_mult = 0;
  bool is_unimodular = true;

  friend bool operator==(const CircleReport&, const CircleReport&) = default;
};

struct UnitRootSplit {
  Polynomial residual;
  int at_one = 0;
  int at_minus_one = 0;
};

/// Divides out every factor t - 1 and t + 1.
UnitRootSplit strip_unit_roots(const Polynomial& p);

/// Exact census by square-free decomposition, the y = t + 1/t transform and
/// Sturm counting on (-2, 2). Accepts any polynomial whose residual after
/// stripping +-1 roots is palindromic; throws NotPalindromic otherwise.
CircleReport count_circle_roots(const Polynomial& p);

enum class ModulusClass { on, inside, outside, undecided };
std::string to_string(ModulusClass c);

struct LocatedRoot {
  BigFloat real;
  BigFloat imag;
  /// The disk of this radius around (real, imag) contains exactly one root.
  BigFloat radius_error;
  ModulusClass modulus_class = ModulusClass::undecided;
};

/// Aberth–Ehrlich approximation of all roots of a square-free polynomial with
/// Braess–Hadeler inclusion radii. Roots whose disk straddles the unit circle
/// are `undecided`. Throws PrecisionExhausted when the inclusion disks are not
/// pairwise disjoint at this precision.
std::vector<LocatedRoot> locate_roots_numeric(const Polynomial& p, unsigned precision_bits);

/// Relabels `undecided` roots as `on` when their number matches the exact
/// on-circle count (excluding +-1 roots, which the caller strips beforehand).
void reconcile_with_certificate(std::vector<LocatedRoot>& roots, int exact_on_circle);

/// Numeric census with multiplicities taken from the exact square-free
/// decomposition; roots at +-1 are stripped exactly first.
struct NumericCensus {
  int degree = 0;
  int at_one = 0;
  int at_minus_one = 0;
  int inside = 0;
  int outside = 0;
  int undecided = 0;
  unsigned precision_bits = 0;

  int off_circle() const { return inside + outside; }
};

NumericCensus numeric_census(const Polynomial& p, unsigned precision_bits);

struct CrossCheckOptions {
  unsigned initial_precision = 128;
  unsigned precision_cap = 4096;
};

/// Reads UNIMODAL_PRECISION_CAP from the environment when set.
CrossCheckOptions cross_check_options_from_env(CrossCheckOptions base = {});

struct CrossCheckResult {
  bool agree = false;
  CircleReport exact;
  NumericCensus numeric;
};

/// Compares the exact census with the numeric one, doubling precision while
/// some off-circle roots are still undecided. Throws PrecisionExhausted past
/// the cap.
CrossCheckResult cross_check_detailed(const Polynomial& p, const CrossCheckOptions& options = {});
bool cross_check(const Polynomial& p, const CrossCheckOptions& options = {});

}  // namespace unimodal
