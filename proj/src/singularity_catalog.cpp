#include "unimodal/singularity_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

#include "unimodal/errors.hpp"

namespace unimodal {

SimpleSingularity SimpleSingularity::A(int k) {
  if (k < 1) throw ParameterOutOfRange("A_k requires k >= 1, got " + std::to_string(k));
  return {SingularityKind::A, k};
}

SimpleSingularity SimpleSingularity::D(int m) {
  if (m < 4) throw ParameterOutOfRange("D_m requires m >= 4, got " + std::to_string(m));
  return {SingularityKind::D, m};
}

std::string SimpleSingularity::to_string() const {
  switch (kind) {
    case SingularityKind::A:
      return "A" + std::to_string(parameter);
    case SingularityKind::D:
      return "D" + std::to_string(parameter);
    case SingularityKind::E6:
      return "E6";
    case SingularityKind::E7:
      return "E7";
    case SingularityKind::E8:
      return "E8";
  }
  return "?";
}

SingularitySpec::SingularitySpec(std::vector<Summand> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw std::invalid_argument("a singularity spec needs at least one summand");
  for (const auto& s : summands_) {
    if (s.weight < 1) throw ParameterOutOfRange("weights must be positive");
  }
  std::sort(summands_.begin(), summands_.end());
}

bool SingularitySpec::unit_weights() const {
  return std::all_of(summands_.begin(), summands_.end(), [](const Summand& s) { return s.weight == 1; });
}

std::string SingularitySpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < summands_.size();) {
    std::size_t j = i;
    while (j < summands_.size() && summands_[j] == summands_[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i) + "*";
    out += summands_[i].singularity.to_string();
    if (summands_[i].weight != 1) out += "@" + std::to_string(summands_[i].weight);
    i = j;
  }
  return out;
}

namespace {

class SpecParser {
 public:
  SpecParser(std::string_view text, const CatalogLimits& limits) : text_(text), limits_(limits) {}

  std::vector<Summand> parse() {
    std::vector<Summand> out;
    skip_space();
    if (at_end()) throw SyntaxError("empty singularity spec", pos_);
    while (true) {
      parse_term(out);
      skip_space();
      if (at_end()) break;
      if (text_[pos_] != '+') throw SyntaxError("expected '+'", pos_);
      ++pos_;
      skip_space();
    }
    return out;
  }

 private:
  void parse_term(std::vector<Summand>& out) {
    int count = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t at = pos_;
      count = read_int();
      if (count < 1) throw ParameterOutOfRange("multiplier must be positive (position " + std::to_string(at) + ")");
      skip_space();
      if (peek() != '*') throw SyntaxError("expected '*' after multiplier", pos_);
      ++pos_;
      skip_space();
    }
    SimpleSingularity kind = parse_kind();
    skip_space();
    int weight = 1;
    if (peek() == '@') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("expected weight after '@'", pos_);
      weight = read_int();
      if (weight < 1) throw ParameterOutOfRange("weight must be positive (position " + std::to_string(at) + ")");
    }
    for (int i = 0; i < count; ++i) out.push_back({kind, weight});
  }

  SimpleSingularity parse_kind() {
    const std::size_t at = pos_;
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(peek())));
    if (letter != 'A' && letter != 'D' && letter != 'E') {
      throw SyntaxError(at_end() ? "unexpected end of spec" : "expected A, D or E", pos_);
    }
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("expected a number after kind letter", pos_);
    const int n = read_int();
    const std::string where = " (position " + std::to_string(at) + ")";
    switch (letter) {
      case 'A':
        if (n < 1) throw ParameterOutOfRange("A_k requires k >= 1" + where);
        return SimpleSingularity::A(n);
      case 'D':
        if (n < 4) throw ParameterOutOfRange("D_m requires m >= 4" + where);
        return SimpleSingularity::D(n);
      default:
        if (n == 6) return SimpleSingularity::E6();
        if (n == 7) return SimpleSingularity::E7();
        if (n == 8) return SimpleSingularity::E8();
        throw ParameterOutOfRange("E_n requires n in {6, 7, 8}" + where);
    }
  }

  int read_int() {
    const std::size_t at = pos_;
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
      if (value > limits_.max_parameter) {
        throw ParameterOutOfRange("number exceeds the limit " + std::to_string(limits_.max_parameter) +
                                  " (position " + std::to_string(at) + ")");
      }
    }
    return static_cast<int>(value);
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const CatalogLimits& limits_;
  std::size_t pos_ = 0;
};

Polynomial one_minus_t_pow(unsigned n) { return Polynomial{1} - Polynomial::monomial(1, n); }
Polynomial one_plus_t_pow(unsigned n) { return Polynomial{1} + Polynomial::monomial(1, n); }

}  // namespace

std::vector<Summand> parse_summands(std::string_view text, const CatalogLimits& limits) {
  return SpecParser(text, limits).parse();
}

SingularitySpec parse_spec(std::string_view text, const CatalogLimits& limits) {
  return SingularitySpec(parse_summands(text, limits));
}

Polynomial poincare_algebra(const SimpleSingularity& s) {
  const unsigned p = static_cast<unsigned>(s.parameter);
  switch (s.kind) {
    case SingularityKind::A:
      return exact_div(one_minus_t_pow(2 * p), one_minus_t_pow(2));
    case SingularityKind::D:
      return exact_div(one_plus_t_pow(p - 2) * one_minus_t_pow(p), one_minus_t_pow(2));
    case SingularityKind::E6:
      return exact_div(one_plus_t_pow(4) * one_minus_t_pow(9), one_minus_t_pow(3));
    case SingularityKind::E7:
      return exact_div(one_plus_t_pow(3) * one_minus_t_pow(7), one_minus_t_pow(2));
    case SingularityKind::E8:
      return exact_div(one_plus_t_pow(5) * one_minus_t_pow(12), one_minus_t_pow(3));
  }
  throw std::logic_error("unknown singularity kind");
}

Polynomial poincare_lie(const SimpleSingularity& s) {
  const unsigned p = static_cast<unsigned>(s.parameter);
  switch (s.kind) {
    case SingularityKind::A:
      return exact_div(one_minus_t_pow(2 * p - 2), one_minus_t_pow(2));
    case SingularityKind::D:
      return exact_div(one_plus_t_pow(p - 4) * one_minus_t_pow(p), one_minus_t_pow(2));
    case SingularityKind::E6:
      return exact_div(one_plus_t_pow(4) * one_minus_t_pow(6) + one_minus_t_pow(9), one_minus_t_pow(3));
    case SingularityKind::E7:
      return exact_div(one_plus_t_pow(3) * one_plus_t_pow(1) * one_minus_t_pow(4), one_minus_t_pow(2));
    case SingularityKind::E8:
      return exact_div(one_plus_t_pow(5) * one_minus_t_pow(9) + one_minus_t_pow(12), one_minus_t_pow(3));
  }
  throw std::logic_error("unknown singularity kind");
}

Polynomial combined_algebra(const SingularitySpec& spec) {
  Polynomial product{1};
  for (const auto& s : spec.summands()) {
    product *= substitute_power(poincare_algebra(s.singularity), static_cast<unsigned>(s.weight));
  }
  return product;
}

Polynomial combined_lie(const SingularitySpec& spec) {
  const auto& summands = spec.summands();
  const std::size_t n = summands.size();
  std::vector<Polynomial> algebra(n);
  std::vector<Polynomial> lie(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto w = static_cast<unsigned>(summands[j].weight);
    algebra[j] = substitute_power(poincare_algebra(summands[j].singularity), w);
    lie[j] = substitute_power(poincare_lie(summands[j].singularity), w);
  }
  // prefix[j] = prod_{i<j} algebra[i]; the running suffix covers i > j.
  std::vector<Polynomial> prefix(n + 1);
  prefix[0] = Polynomial{1};
  for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] * algebra[j];
  Polynomial suffix{1};
  Polynomial total;
  for (std::size_t j = n; j-- > 0;) {
    if (!lie[j].is_zero()) total += lie[j] * prefix[j] * suffix;
    suffix *= algebra[j];
  }
  return total;
}

Rational RationalFn::eval(const Rational& x) const {
  Rational d = den.eval(x);
  if (sgn(d) == 0) throw DivisionByZero();
  return num.eval(x) / d;
}

RationalFn reduce(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return {Polynomial{}, Polynomial{1}};
  Polynomial g = gcd(num, den);
  RationalFn r{exact_div(num, g), exact_div(den, g)};
  Integer c;
  const Integer cn = r.num.content();
  const Integer cd = r.den.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (sgn(r.den.leading()) < 0) c = -c;
  r.num.divide_by_scalar(c);
  r.den.divide_by_scalar(c);
  return r;
}

RationalFn q_rational(const SingularitySpec& spec) { return reduce(combined_lie(spec), combined_algebra(spec)); }

TheoremScope theorem_scope(const SingularitySpec& spec) {
  if (!spec.unit_weights()) return TheoremScope::out_of_scope;
  bool has_e7 = false;
  for (const auto& s : spec.summands()) {
    switch (s.singularity.kind) {
      case SingularityKind::A:
      case SingularityKind::D:
        break;
      case SingularityKind::E7:
        has_e7 = true;
        break;
      default:
        return TheoremScope::out_of_scope;
    }
  }
  return has_e7 ? TheoremScope::A_D_E7 : TheoremScope::A_D;
}

std::string to_string(TheoremScope scope) {
  switch (scope) {
    case TheoremScope::A_D:
      return "A_D";
    case TheoremScope::A_D_E7:
      return "A_D_E7";
    case TheoremScope::out_of_scope:
      return "out_of_scope";
  }
  return "?";
}

}  // namespace unimodal
