#include "unimodal/exact_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "unimodal/errors.hpp"

namespace unimodal {

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Polynomial::deg() const {
  if (coeffs_.empty()) throw ZeroPolynomial();
  return coeffs_.size() - 1;
}

const Integer& Polynomial::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial();
  return coeffs_.back();
}

Integer Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer Polynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Polynomial::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  // Homogenized Horner: sum c_i num^i den^(n-i); den > 0 keeps the sign.
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = coeffs_.back();
  Integer den_pow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc *= num;
    acc += coeffs_[i] * den_pow;
  }
  return sgn(acc);
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  Integer c = content();
  if (sgn(leading()) < 0) c = -c;
  Polynomial r = *this;
  r.divide_by_scalar(c);
  return r;
}

Polynomial Polynomial::reversed() const {
  std::vector<Integer> v(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  *this = mul(*this, q);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial& Polynomial::divide_by_scalar(const Integer& c) {
  if (sgn(c) == 0) throw DivisionByZero();
  for (auto& x : coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw NotDivisible("coefficient not divisible by scalar");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return *this;
}

std::string Polynomial::to_string(char variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << variable;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
Polynomial operator*(Polynomial p, const Integer& c) { return p *= c; }

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  auto a = p.coeffs();
  auto b = q.coeffs();
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(r));
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return {};
  const std::size_t dp = p.deg();
  const std::size_t dq = q.deg();
  if (dp < dq) throw NotDivisible();
  auto divisor = q.coeffs();
  const Integer& lead = q.leading();
  std::vector<Integer> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Integer> quot(dp - dq + 1);
  for (std::size_t i = dp - dq + 1; i-- > 0;) {
    Integer& top = rem[i + dq];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw NotDivisible();
    mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dq; ++j) {
      mpz_submul(rem[i + j].get_mpz_t(), quot[i].get_mpz_t(), divisor[j].get_mpz_t());
    }
  }
  for (std::size_t j = 0; j < dq; ++j) {
    if (sgn(rem[j]) != 0) throw NotDivisible();
  }
  return Polynomial(std::move(quot));
}

Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (p.is_zero() || p.deg() < q.deg()) return p;
  const std::size_t dq = q.deg();
  auto divisor = q.coeffs();
  const Integer& lead = q.leading();
  std::vector<Integer> r(p.coeffs().begin(), p.coeffs().end());
  std::size_t steps = p.deg() - dq + 1;
  std::size_t top = r.size() - 1;
  while (true) {
    while (top > 0 && sgn(r[top]) == 0) --top;
    if (top < dq || sgn(r[top]) == 0) break;
    Integer s = r[top];
    const std::size_t shift = top - dq;
    for (std::size_t i = 0; i <= top; ++i) r[i] *= lead;
    for (std::size_t j = 0; j <= dq; ++j) mpz_submul(r[shift + j].get_mpz_t(), s.get_mpz_t(), divisor[j].get_mpz_t());
    --steps;
  }
  Polynomial result(std::move(r));
  if (steps > 0) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), steps);
    result *= scale;
  }
  return result;
}

Polynomial substitute_power(const Polynomial& p, unsigned w) {
  if (w == 0) throw std::invalid_argument("substitute_power: weight must be positive");
  if (p.is_zero() || w == 1) return p;
  std::vector<Integer> v(p.deg() * w + 1);
  auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) v[i * w] = c[i];
  return Polynomial(std::move(v));
}

bool is_palindromic(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  auto c = p.coeffs();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw ZeroPolynomial("gcd of two zero polynomials");
  if (q.is_zero()) return p.primitive_part();
  if (p.is_zero()) return q.primitive_part();

  Polynomial a = p.primitive_part();
  Polynomial b = q.primitive_part();
  if (a.deg() < b.deg()) std::swap(a, b);

  Integer g = 1;
  Integer h = 1;
  while (true) {
    const std::size_t delta = a.deg() - b.deg();
    Polynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return b.primitive_part();
    if (r.deg() == 0) return Polynomial::constant(1);
    Integer h_pow;
    mpz_pow_ui(h_pow.get_mpz_t(), h.get_mpz_t(), delta);
    r.divide_by_scalar(g * h_pow);
    a = std::move(b);
    b = std::move(r);
    g = a.leading();
    // h <- g^delta / h^(delta - 1)
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), delta);
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

SquareFreeDecomposition squarefree(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  SquareFreeDecomposition out;
  Polynomial f = p.primitive_part();
  out.content = p.content();
  if (sgn(p.leading()) < 0) out.content = -out.content;
  if (f.deg() == 0) return out;

  // Yun's algorithm; every division below is exact over Z because the
  // divisors are primitive.
  Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = exact_div(f, a);
  Polynomial c = exact_div(df, a);
  Polynomial d = c - b.derivative();
  unsigned multiplicity = 1;
  while (b.deg() > 0) {
    Polynomial part = gcd(b, d);
    if (part.deg() > 0) out.parts.push_back({part, multiplicity});
    b = exact_div(b, part);
    c = exact_div(d, part);
    d = c - b.derivative();
    ++multiplicity;
  }
  return out;
}

Polynomial to_symmetric(const Polynomial& p) {
  if (!is_palindromic(p)) throw NotPalindromic();
  const std::size_t n = p.deg();
  if (n % 2 != 0) throw OddDegree();
  if (sgn(p.eval(Integer(1))) == 0 || sgn(p.eval(Integer(-1))) == 0) throw RootAtUnity();

  const std::size_t d = n / 2;
  // t^k + t^-k as a polynomial in y = t + 1/t: C_0 = 2, C_1 = y, C_k = y C_{k-1} - C_{k-2}.
  const Polynomial y{0, 1};
  Polynomial prev{2};
  Polynomial cur = y;
  Polynomial q = Polynomial::constant(p.coeff(d));
  for (std::size_t k = 1; k <= d; ++k) {
    if (k > 1) {
      Polynomial next = y * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    q += cur * p.coeff(d - k);
  }
  return q;
}

std::vector<Polynomial> sturm_chain(const Polynomial& q) {
  if (q.is_zero()) throw ZeroPolynomial();
  std::vector<Polynomial> chain{q};
  Polynomial d = q.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    Polynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^e * rem; negate unless that factor is negative.
    const std::size_t e = a.deg() - b.deg() + 1;
    const bool negative_scale = sgn(b.leading()) < 0 && e % 2 == 1;
    if (!negative_scale) r = -r;
    r.divide_by_scalar(r.content());
    chain.push_back(std::move(r));
    if (chain.back().deg() == 0) break;
  }
  return chain;
}

namespace {

std::size_t sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  std::size_t variations = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sign = s.sign_at(x);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++variations;
    last = sign;
  }
  return variations;
}

}  // namespace

std::size_t sturm_count(const Polynomial& q, const Rational& a, const Rational& b) {
  if (q.is_zero()) throw ZeroPolynomial();
  if (!(a < b)) throw std::invalid_argument("sturm_count: empty interval");
  if (q.sign_at(a) == 0 || q.sign_at(b) == 0) throw EndpointIsRoot();
  if (q.deg() == 0) return 0;
  if (gcd(q, q.derivative()).deg() > 0) throw NotSquareFree();
  auto chain = sturm_chain(q);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace unimodal
