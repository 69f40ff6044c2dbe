#include "unimodal/phi_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "unimodal/bigfloat.hpp"
#include "unimodal/errors.hpp"

namespace unimodal {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

// Reduces a rational multiple of pi into [0, 2).
Rational reduce_angle(const Rational& angle) {
  Integer q;
  Rational half = angle / 2;
  mpz_fdiv_q(q.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  Rational r = angle - Rational(q * 2);
  r.canonicalize();
  return r;
}

long double to_ld(const Rational& r) { return static_cast<long double>(r.get_d()); }

}  // namespace

long double PhiTerm::value(long double x) const {
  const auto p = static_cast<long double>(parameter);
  switch (kind) {
    case Kind::A:
      return std::sin((2 * p - 2) * x) / std::sin(2 * p * x);
    case Kind::D:
      return std::cos((p - 4) * x) / std::cos((p - 2) * x);
    case Kind::E7:
      return 2 * std::sin(4 * x) * std::cos(x) / std::sin(7 * x);
  }
  return 0;
}

std::string PhiTerm::to_string() const {
  switch (kind) {
    case Kind::A:
      return "A" + std::to_string(parameter);
    case Kind::D:
      return "D" + std::to_string(parameter);
    case Kind::E7:
      return "E7";
  }
  return "?";
}

int TrigFactor::sign() const {
  Rational r = reduce_angle(fn == Fn::cos ? angle + Rational(1, 2) : angle);
  if (sgn(r) == 0 || r == 1) return 0;
  return r < 1 ? 1 : -1;
}

long double TrigFactor::value() const {
  const long double theta = to_ld(reduce_angle(angle)) * kPi;
  return fn == Fn::sin ? std::sin(theta) : std::cos(theta);
}

int ResidueTerm::sign() const {
  int s = sgn(coefficient);
  for (const auto& f : factors) s *= f.sign();
  return s;
}

long double ResidueTerm::value() const {
  long double v = to_ld(coefficient);
  for (const auto& f : factors) v *= f.value();
  return v;
}

std::string ResidueTerm::to_string() const {
  std::ostringstream out;
  out << coefficient.get_str();
  for (const auto& f : factors) {
    out << "*" << (f.fn == TrigFactor::Fn::sin ? "sin(" : "cos(") << f.angle.get_str() << "pi)";
  }
  return out.str();
}

std::vector<PhiTerm> build_phi(const SingularitySpec& spec) {
  if (!spec.unit_weights()) throw UnsupportedSummand("phi analysis requires unit weights");
  std::vector<PhiTerm> terms;
  for (const auto& s : spec.summands()) {
    const auto& sing = s.singularity;
    switch (sing.kind) {
      case SingularityKind::A:
        if (sing.parameter >= 2) terms.push_back({PhiTerm::Kind::A, sing.parameter});
        break;
      case SingularityKind::D:
        terms.push_back({PhiTerm::Kind::D, sing.parameter});
        break;
      case SingularityKind::E7:
        terms.push_back({PhiTerm::Kind::E7, 7});
        break;
      default:
        throw UnsupportedSummand("phi analysis does not cover " + sing.to_string());
    }
  }
  return terms;
}

namespace {

struct RawPole {
  Rational location;
  ResidueTerm residue;
};

// Poles of a single term in (0, 1/2) (units of pi) with the closed-form residue.
std::vector<RawPole> term_poles(const PhiTerm& term) {
  std::vector<RawPole> out;
  const int p = term.parameter;
  switch (term.kind) {
    case PhiTerm::Kind::A:
      // sin(2kx) = 0 at x = n pi / (2k); residue sin((2k-2)x0) / (2k cos(2k x0)).
      for (int n = 1; 2 * n < 2 * p; ++n) {
        Rational loc(n, 2 * p);
        loc.canonicalize();
        ResidueTerm r{Rational(n % 2 == 0 ? 1 : -1, 2 * p), {{TrigFactor::Fn::sin, Rational(n * (p - 1), p)}}};
        r.coefficient.canonicalize();
        r.factors[0].angle.canonicalize();
        out.push_back({loc, r});
      }
      break;
    case PhiTerm::Kind::D:
      // cos((m-2)x) = 0 at x = (n + 1/2) pi / (m-2);
      // residue -cos((m-4)x0) / ((m-2) sin((m-2)x0)) with sin((m-2)x0) = (-1)^n.
      for (int n = 0; 2 * n + 1 < p - 2; ++n) {
        Rational loc(2 * n + 1, 2 * (p - 2));
        loc.canonicalize();
        ResidueTerm r{Rational(n % 2 == 0 ? -1 : 1, p - 2),
                      {{TrigFactor::Fn::cos, Rational((p - 4) * (2 * n + 1), 2 * (p - 2))}}};
        r.coefficient.canonicalize();
        r.factors[0].angle.canonicalize();
        out.push_back({loc, r});
      }
      break;
    case PhiTerm::Kind::E7:
      // sin(7x) = 0 at x = j pi / 7; residue 2 sin(4x0) cos(x0) / (7 cos(7x0)).
      for (int j = 1; j <= 3; ++j) {
        ResidueTerm r{Rational(j % 2 == 0 ? 2 : -2, 7),
                      {{TrigFactor::Fn::sin, Rational(4 * j, 7)}, {TrigFactor::Fn::cos, Rational(j, 7)}}};
        out.push_back({Rational(j, 7), r});
      }
      break;
  }
  return out;
}

// Sum of closed-form residues in 256-bit arithmetic; returns the sign when it
// is separated from zero, 0 otherwise.
int certified_sum_sign(const std::vector<ResidueTerm>& terms) {
  constexpr unsigned prec = 256;
  BigFloat pi(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  BigFloat sum(prec);
  BigFloat magnitude(prec);
  for (const auto& term : terms) {
    BigFloat v(prec);
    mpfr_set_q(v.get(), term.coefficient.get_mpq_t(), MPFR_RNDN);
    for (const auto& f : term.factors) {
      BigFloat theta = pi;
      mpfr_mul_q(theta.get(), theta.get(), reduce_angle(f.angle).get_mpq_t(), MPFR_RNDN);
      if (f.fn == TrigFactor::Fn::sin) {
        mpfr_sin(theta.get(), theta.get(), MPFR_RNDN);
      } else {
        mpfr_cos(theta.get(), theta.get(), MPFR_RNDN);
      }
      v *= theta;
    }
    sum += v;
    magnitude += abs(v);
  }
  if (abs(sum) > magnitude * pow2(-200, prec)) return sum.sign();
  return 0;
}

}  // namespace

std::vector<Pole> poles_in_interval(const std::vector<PhiTerm>& terms) {
  std::map<Rational, Pole> merged;
  for (const auto& term : terms) {
    for (auto& raw : term_poles(term)) {
      if (raw.residue.sign() == 0) continue;  // removable
      Pole& pole = merged[raw.location];
      pole.location = raw.location;
      pole.sources.push_back(term);
      pole.residue_terms.push_back(std::move(raw.residue));
    }
  }

  std::vector<Pole> out;
  for (auto& [location, pole] : merged) {
    long double value = 0;
    bool mixed = false;
    const int first = pole.residue_terms.front().sign();
    for (const auto& r : pole.residue_terms) {
      value += r.value();
      if (r.sign() != first) mixed = true;
    }
    pole.residue_value = value;
    if (!mixed) {
      pole.residue_sign = first;
    } else {
      pole.residue_sign = certified_sum_sign(pole.residue_terms);
      pole.sign_certified_numerically = true;
      if (pole.residue_sign == 0) {
        throw PoleCollision("residues of opposite sign cancel to working precision at " + location.get_str() +
                            "*pi");
      }
    }
    out.push_back(std::move(pole));
  }
  return out;
}

long double evaluate_phi(const std::vector<PhiTerm>& terms, long double x) {
  long double sum = 0;
  for (const auto& t : terms) sum += t.value(x);
  return sum;
}

EndpointValues endpoint_values(const SingularitySpec& spec) {
  build_phi(spec);  // scope check
  EndpointValues out{0, 0};
  for (const auto& s : spec.summands()) {
    RationalFn ratio = reduce(poincare_lie(s.singularity), poincare_algebra(s.singularity));
    out.phi_at_zero += ratio.eval(Rational(1));
    out.phi_at_half_pi -= ratio.eval(Rational(-1));
  }
  out.phi_at_zero.canonicalize();
  out.phi_at_half_pi.canonicalize();
  return out;
}

int endpoint_side_sign(const RationalFn& q, bool at_zero) {
  if (q.num.is_zero()) return 0;
  const Integer t0 = at_zero ? 1 : -1;
  const Polynomial linear{at_zero ? -1 : 1, 1};
  Polynomial rest = q.num;
  int order = 0;
  while (sgn(rest.eval(t0)) == 0) {
    rest = exact_div(rest, linear);
    ++order;
  }
  const int den_sign = sgn(q.den.eval(t0));
  if (den_sign == 0) throw std::logic_error("Q has a pole at an endpoint");
  if (order % 2 != 0) throw std::logic_error("odd-order zero of an even function at an endpoint");
  // t - t0 = 2i t0 e^{+-is} sin(s) near the endpoint, so (t - t0)^order
  // contributes (-1)^(order/2); at pi/2 the extra factor t0 = -1 flips the sign.
  int s = sgn(rest.eval(t0)) * den_sign * ((order / 2) % 2 == 0 ? 1 : -1);
  return at_zero ? s : -s;
}

ZeroCount count_zeros_numeric(const std::vector<PhiTerm>& terms, const std::vector<Pole>& poles,
                              const ZeroCountOptions& options) {
  ZeroCount out;
  std::vector<long double> edges{0};
  for (const auto& p : poles) edges.push_back(to_ld(p.location) * kPi);
  edges.push_back(kPi / 2);

  auto sign_of = [](long double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };

  for (std::size_t seg = 0; seg + 1 < edges.size(); ++seg) {
    const long double a = edges[seg];
    const long double b = edges[seg + 1];
    std::vector<long double> xs, vs;
    // Interior points a + (b - a) j / (n + 1); each doubling step (n -> 2n + 1)
    // keeps the previous points at odd positions and evaluates only the new ones.
    auto sample = [&](int n) {
      const bool nested = !xs.empty() && static_cast<int>(xs.size()) * 2 + 1 == n;
      std::vector<long double> old_vs;
      if (nested) old_vs.swap(vs);
      xs.resize(static_cast<std::size_t>(n));
      vs.resize(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        xs[j] = a + (b - a) * static_cast<long double>(j + 1) / static_cast<long double>(n + 1);
        vs[j] = nested && j % 2 == 1 ? old_vs[static_cast<std::size_t>(j / 2)] : evaluate_phi(terms, xs[j]);
      }
    };
    auto sign_changes = [&]() {
      int changes = 0;
      int last = 0;
      for (long double v : vs) {
        const int s = sign_of(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
      }
      return changes;
    };

    int n = options.initial_samples;
    sample(n);
    int previous = sign_changes();
    int repeats = 0;
    while (repeats < 2) {
      if (n * 2 + 1 > options.max_samples) throw Unstable("sign pattern did not stabilize");
      n = n * 2 + 1;
      sample(n);
      const int current = sign_changes();
      repeats = current == previous ? repeats + 1 : 0;
      previous = current;
    }
    out.count += previous;

    // Bisection on each bracketing pair.
    int last_index = -1;
    for (int j = 0; j < n; ++j) {
      if (sign_of(vs[j]) == 0) continue;
      if (last_index >= 0 && sign_of(vs[j]) != sign_of(vs[last_index])) {
        long double lo = xs[last_index], hi = xs[j];
        const int lo_sign = sign_of(vs[last_index]);
        for (int it = 0; it < 64 && hi - lo > 0; ++it) {
          const long double mid = (lo + hi) / 2;
          if (mid <= lo || mid >= hi) break;
          if (sign_of(evaluate_phi(terms, mid)) == lo_sign) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        out.zeros.push_back((lo + hi) / 2);
      }
      last_index = j;
    }

    for (int j = 1; j + 1 < n; ++j) {
      const long double v = std::fabs(vs[j]);
      if (v < std::fabs(vs[j - 1]) && v < std::fabs(vs[j + 1]) && sign_of(vs[j - 1]) == sign_of(vs[j + 1]) &&
          sign_of(vs[j]) == sign_of(vs[j - 1]) && v < 1e-9L) {
        ++out.suspected_touch;
      }
    }
  }
  return out;
}

PhiReport zero_bound_report(const SingularitySpec& spec) {
  PhiReport report;
  const auto terms = build_phi(spec);
  if (!terms.empty()) report.poles = poles_in_interval(terms);
  for (const auto& p : report.poles) {
    if (p.residue_sign > 0) {
      ++report.n_plus;
    } else {
      ++report.n_minus;
    }
  }
  const EndpointValues ends = endpoint_values(spec);
  report.phi_at_zero = ends.phi_at_zero;
  report.phi_at_half_pi = ends.phi_at_half_pi;
  const RationalFn q = q_rational(spec);
  report.sign_at_zero = endpoint_side_sign(q, true);
  report.sign_at_half_pi = endpoint_side_sign(q, false);
  report.c = report.sign_at_zero * report.sign_at_half_pi < 0 ? 1 : 0;
  report.zero_lower_bound = std::abs(report.n_plus - report.n_minus) - report.c;
  const ZeroCount zeros = count_zeros_numeric(terms, report.poles);
  report.numeric_zero_count = zeros.count;
  report.suspected_touch_zeros = zeros.suspected_touch;
  report.zeros = zeros.zeros;
  return report;
}

}  // namespace unimodal
