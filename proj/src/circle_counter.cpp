#include "unimodal/circle_counter.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "unimodal/errors.hpp"

namespace unimodal {

UnitRootSplit strip_unit_roots(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  UnitRootSplit out{p, 0, 0};
  const Polynomial t_minus_one{-1, 1};
  const Polynomial t_plus_one{1, 1};
  while (sgn(out.residual.eval(Integer(1))) == 0) {
    out.residual = exact_div(out.residual, t_minus_one);
    ++out.at_one;
  }
  while (sgn(out.residual.eval(Integer(-1))) == 0) {
    out.residual = exact_div(out.residual, t_plus_one);
    ++out.at_minus_one;
  }
  return out;
}

CircleReport count_circle_roots(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  UnitRootSplit split = strip_unit_roots(p);
  if (!is_palindromic(split.residual)) throw NotPalindromic();

  CircleReport report;
  report.degree = static_cast<int>(p.deg());
  report.at_one = split.at_one;
  report.at_minus_one = split.at_minus_one;
  if (split.residual.deg() > 0) {
    const Rational lo(-2), hi(2);
    for (const auto& part : squarefree(split.residual).parts) {
      // Each real root of the y-image in (-2, 2) is a conjugate pair on the circle.
      const auto pairs = static_cast<int>(sturm_count(to_symmetric(part.factor), lo, hi));
      report.on_circle_distinct += 2 * pairs;
      report.on_circle_with_mult += 2 * pairs * static_cast<int>(part.multiplicity);
    }
  }
  report.off_circle_with_mult = report.degree - report.at_one - report.at_minus_one - report.on_circle_with_mult;
  report.is_unimodular = report.off_circle_with_mult == 0;
  return report;
}

std::string to_string(ModulusClass c) {
  switch (c) {
    case ModulusClass::on:
      return "on";
    case ModulusClass::inside:
      return "inside";
    case ModulusClass::outside:
      return "outside";
    case ModulusClass::undecided:
      return "undecided";
  }
  return "?";
}

namespace {

struct Complex {
  BigFloat re;
  BigFloat im;

  explicit Complex(unsigned prec) : re(prec), im(prec) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    BigFloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  BigFloat norm() const { return sqrt(re * re + im * im); }
};

using LongComplex = std::complex<long double>;

// Aberth–Ehrlich in extended double precision; gives a starting point for the
// multiprecision polish.
std::vector<LongComplex> aberth_long_double(const std::vector<long double>& a) {
  const std::size_t n = a.size() - 1;
  const long double radius = std::pow(std::abs(a[0] / a[n]), 1.0L / static_cast<long double>(n));
  const long double start = radius > 0 ? radius : 1.0L;
  std::vector<LongComplex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(start, angle);
  }
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < 2000; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      LongComplex p = a[n];
      LongComplex dp = 0;
      long double magnitude = std::abs(a[n]);
      const long double modulus = std::abs(z[k]);
      for (std::size_t i = n; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + a[i];
        magnitude = magnitude * modulus + std::abs(a[i]);
      }
      // Residual at the rounding level of Horner's rule: no further progress possible.
      if (std::abs(p) <= 4 * static_cast<long double>(n) * std::numeric_limits<long double>::epsilon() * magnitude) {
        done[k] = true;
        continue;
      }
      const LongComplex ratio = p / dp;
      LongComplex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      }
      const LongComplex step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(z[k]))) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  return z;
}

void horner(const std::vector<BigFloat>& a, const Complex& z, Complex& p, Complex& dp) {
  const std::size_t n = a.size() - 1;
  const unsigned prec = a[n].precision();
  p = Complex(a[n], BigFloat(prec));
  dp = Complex(prec);
  for (std::size_t i = n; i-- > 0;) {
    dp = dp * z;
    dp += p;
    p = p * z;
    p.re += a[i];
  }
}

}  // namespace

std::vector<LocatedRoot> locate_roots_numeric(const Polynomial& p, unsigned precision_bits) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (precision_bits < 64) throw std::invalid_argument("locate_roots_numeric: precision_bits must be >= 64");
  const std::size_t n = p.deg();
  if (n == 0) return {};

  const unsigned prec = precision_bits;
  std::vector<BigFloat> a;
  std::vector<long double> a_ld;
  for (const auto& c : p.coeffs()) {
    a.emplace_back(c, prec);
    a_ld.push_back(a.back().to_long_double());
  }

  std::vector<Complex> z;
  for (const auto& root : aberth_long_double(a_ld)) {
    z.emplace_back(BigFloat(static_cast<double>(root.real()), prec), BigFloat(static_cast<double>(root.imag()), prec));
    // Keep the extra long double bits.
    mpfr_set_ld(z.back().re.get(), root.real(), MPFR_RNDN);
    mpfr_set_ld(z.back().im.get(), root.imag(), MPFR_RNDN);
  }

  // Multiprecision Aberth polish. A tiny asymmetric nudge breaks the conjugate
  // symmetry of the starting points, which would otherwise keep a cluster of
  // nearly equal real roots approximated by a complex pair.
  const BigFloat tolerance = pow2(-static_cast<long>(prec) + 8, prec);
  const BigFloat one(1.0, prec);
  for (std::size_t k = 0; k < n; ++k) {
    const BigFloat nudge = pow2(-48, prec) * BigFloat(static_cast<double>(k + 1), prec);
    z[k].re += nudge;
    z[k].im += nudge * BigFloat(0.5, prec);
  }
  const BigFloat noise = BigFloat(4.0 * static_cast<double>(n), prec) * pow2(-static_cast<long>(prec) + 1, prec);
  Complex pz(prec), dpz(prec);
  std::vector<bool> done(n, false);
  for (unsigned iter = 0; iter < 100 + prec / 4; ++iter) {
    bool converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      horner(a, z[k], pz, dpz);
      const BigFloat modulus = z[k].norm();
      BigFloat magnitude(prec);
      for (std::size_t i = n + 1; i-- > 0;) magnitude = magnitude * modulus + abs(a[i]);
      if (!(pz.norm() > noise * magnitude)) {
        done[k] = true;
        continue;
      }
      Complex ratio = pz / dpz;
      Complex repulsion(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += Complex(one, BigFloat(prec)) / (z[k] - z[j]);
      }
      Complex denom = Complex(one, BigFloat(prec)) - ratio * repulsion;
      Complex step = ratio / denom;
      z[k] -= step;
      BigFloat scale = z[k].norm();
      if (scale < 1.0) scale = one;
      if (step.norm() > tolerance * scale) {
        converged = false;
      } else {
        done[k] = true;
      }
    }
    if (converged) break;
  }

  // Braess–Hadeler inclusion: the disk of radius n |p(z_k)| / (|a_n| prod |z_k - z_j|)
  // contains a root; pairwise disjoint disks each contain exactly one.
  std::vector<LocatedRoot> roots;
  roots.reserve(n);
  const BigFloat unit_roundoff = pow2(-static_cast<long>(prec) + 1, prec);
  const BigFloat inflation = one + pow2(-static_cast<long>(prec) / 2, prec);
  const BigFloat degree(static_cast<double>(n), prec);
  const BigFloat lead = abs(a[n]);
  for (std::size_t k = 0; k < n; ++k) {
    horner(a, z[k], pz, dpz);
    const BigFloat modulus = z[k].norm();
    // Rounding error bound for Horner: 2n u sum |a_i| |z|^i.
    BigFloat magnitude(prec);
    for (std::size_t i = n + 1; i-- > 0;) magnitude = magnitude * modulus + abs(a[i]);
    BigFloat residual = pz.norm() + degree * BigFloat(2.0, prec) * unit_roundoff * magnitude;
    BigFloat product = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) product *= (z[k] - z[j]).norm();
    }
    LocatedRoot root{z[k].re, z[k].im, degree * residual / product * inflation, ModulusClass::undecided};
    roots.push_back(std::move(root));
  }

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k + 1; j < n; ++j) {
      Complex diff(roots[k].real - roots[j].real, roots[k].imag - roots[j].imag);
      if (!(diff.norm() > roots[k].radius_error + roots[j].radius_error)) {
        throw PrecisionExhausted("root inclusion disks overlap at " + std::to_string(prec) + " bits");
      }
    }
    const BigFloat modulus = Complex(roots[k].real, roots[k].imag).norm();
    if (modulus - roots[k].radius_error > one) {
      roots[k].modulus_class = ModulusClass::outside;
    } else if (modulus + roots[k].radius_error < one) {
      roots[k].modulus_class = ModulusClass::inside;
    }
  }
  return roots;
}

void reconcile_with_certificate(std::vector<LocatedRoot>& roots, int exact_on_circle) {
  const auto undecided = std::count_if(roots.begin(), roots.end(),
                                       [](const LocatedRoot& r) { return r.modulus_class == ModulusClass::undecided; });
  if (undecided != exact_on_circle) return;
  for (auto& r : roots) {
    if (r.modulus_class == ModulusClass::undecided) r.modulus_class = ModulusClass::on;
  }
}

NumericCensus numeric_census(const Polynomial& p, unsigned precision_bits) {
  UnitRootSplit split = strip_unit_roots(p);
  NumericCensus census;
  census.degree = static_cast<int>(p.deg());
  census.at_one = split.at_one;
  census.at_minus_one = split.at_minus_one;
  census.precision_bits = precision_bits;
  if (split.residual.deg() == 0) return census;
  for (const auto& part : squarefree(split.residual).parts) {
    const int mult = static_cast<int>(part.multiplicity);
    for (const auto& root : locate_roots_numeric(part.factor, precision_bits)) {
      switch (root.modulus_class) {
        case ModulusClass::inside:
          census.inside += mult;
          break;
        case ModulusClass::outside:
          census.outside += mult;
          break;
        default:
          census.undecided += mult;
          break;
      }
    }
  }
  return census;
}

CrossCheckOptions cross_check_options_from_env(CrossCheckOptions base) {
  if (const char* cap = std::getenv("UNIMODAL_PRECISION_CAP")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(cap, &end, 10);
    if (end != cap && *end == '\0' && value >= 64) base.precision_cap = static_cast<unsigned>(value);
  }
  return base;
}

CrossCheckResult cross_check_detailed(const Polynomial& p, const CrossCheckOptions& options) {
  CrossCheckResult result;
  result.exact = count_circle_roots(p);
  unsigned prec = std::max(64u, options.initial_precision);
  while (true) {
    bool isolated = true;
    try {
      result.numeric = numeric_census(p, prec);
    } catch (const PrecisionExhausted&) {
      isolated = false;
    }
    if (isolated) {
      const int numeric_off = result.numeric.off_circle();
      if (numeric_off > result.exact.off_circle_with_mult) {
        result.agree = false;
        return result;
      }
      if (numeric_off == result.exact.off_circle_with_mult) {
        result.agree = result.numeric.undecided == result.exact.on_circle_with_mult &&
                       result.numeric.at_one == result.exact.at_one &&
                       result.numeric.at_minus_one == result.exact.at_minus_one;
        return result;
      }
    }
    if (prec >= options.precision_cap) {
      throw PrecisionExhausted("cross-check unresolved at the precision cap of " +
                               std::to_string(options.precision_cap) + " bits");
    }
    prec = std::min(prec * 2, options.precision_cap);
  }
}

bool cross_check(const Polynomial& p, const CrossCheckOptions& options) { return cross_check_detailed(p, options).agree; }

}  // namespace unimodal
