#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "unimodal/errors.hpp"
#include "unimodal/exact_poly.hpp"

using namespace unimodal;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_degree, int bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  if (sgn(c.back()) == 0) c.back() = 1;
  return Polynomial(std::move(c));
}

Polynomial random_palindromic(std::mt19937& rng, int max_half, int bound) {
  std::uniform_int_distribution<int> half(0, max_half);
  std::uniform_int_distribution<int> coef(1, bound);
  const int n = 2 * half(rng) + (rng() % 2);
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n / 2; ++i) c[i] = c[n - i] = coef(rng);
  return Polynomial(std::move(c));
}

// t^d q(t + 1/t), expanded as sum_j q_j (t^2 + 1)^j t^(d - j).
Polynomial expand_symmetric(const Polynomial& q) {
  const std::size_t d = q.deg();
  Polynomial out;
  Polynomial power{1};
  const Polynomial t2_plus_1{1, 0, 1};
  for (std::size_t j = 0; j <= d; ++j) {
    out += power * Polynomial::monomial(q.coeff(j), d - j);
    power *= t2_plus_1;
  }
  return out;
}

// Oracle for sturm_count: sign changes on a uniform rational grid, refined
// until the count is stable over three doublings.
std::size_t grid_root_count(const Polynomial& q, const Rational& a, const Rational& b) {
  std::size_t previous = SIZE_MAX;
  int stable = 0;
  for (long n = 64; n <= (1L << 16); n *= 2) {
    std::size_t changes = 0;
    int last = sgn(q.eval(a));
    for (long i = 1; i <= n; ++i) {
      Rational x = a + (b - a) * Rational(i, n);
      x.canonicalize();
      const int s = sgn(q.eval(x));
      if (s != 0 && s != last) ++changes;
      if (s != 0) last = s;
    }
    if (changes == previous) {
      if (++stable == 2) return changes;
    } else {
      stable = 0;
    }
    previous = changes;
  }
  return previous;
}

}  // namespace

TEST_CASE("add") {
  CHECK(add(Polynomial{1, 1}, Polynomial{1, -1}) == Polynomial{2});
  const Polynomial p{3, 0, -1, 4};
  CHECK(add(Polynomial{}, p) == p);
  CHECK(add(Polynomial{1, 0, 1}, Polynomial{1, 0, 2, 0, 1}) == Polynomial{2, 0, 3, 0, 1});
  CHECK((p - p).is_zero());
  CHECK_FALSE((p - p).degree().has_value());
}

TEST_CASE("mul") {
  CHECK(mul(Polynomial{1, 0, 1}, Polynomial{1, 0, 1, 0, 1}) == Polynomial{1, 0, 2, 0, 2, 0, 1});
  const Polynomial p{-2, 5, 0, 7};
  CHECK(mul(p, Polynomial{1}) == p);
  CHECK(mul(p, Polynomial{}).is_zero());
}

TEST_CASE("exact_div") {
  CHECK(exact_div(Polynomial{1, 0, 0, 0, -1}, Polynomial{1, 0, -1}) == Polynomial{1, 0, 1});
  const Polynomial p{4, -1, 3};
  CHECK(exact_div(p, p) == Polynomial{1});
  // P(E7) from (1 + t^3)(1 - t^7) / (1 - t^2)
  const Polynomial e7 = exact_div(Polynomial{1, 0, 0, 1, 0, 0, 0, -1, 0, 0, -1}, Polynomial{1, 0, -1});
  CHECK(e7 == Polynomial{1, 0, 1, 1, 1, 1, 1, 0, 1});
  CHECK(e7 * Polynomial{1, 0, -1} == Polynomial{1, 0, 0, 1, 0, 0, 0, -1, 0, 0, -1});

  CHECK_THROWS_AS(exact_div(p, Polynomial{}), DivisionByZero);
  CHECK_THROWS_AS(exact_div(Polynomial{1, 0, 1}, Polynomial{1, 1}), NotDivisible);
  CHECK_THROWS_AS(exact_div(Polynomial{1, 1}, Polynomial{1, 0, 1}), NotDivisible);
  CHECK_THROWS_AS(exact_div(Polynomial{1, 1}, Polynomial{2}), NotDivisible);
}

TEST_CASE("substitute_power") {
  CHECK(substitute_power(Polynomial{1, 1}, 3) == Polynomial{1, 0, 0, 1});
  const Polynomial p{2, -1, 5};
  CHECK(substitute_power(p, 1) == p);
  CHECK(substitute_power(Polynomial{1, 1, 1}, 2) == Polynomial{1, 0, 1, 0, 1});
  CHECK(substitute_power(Polynomial{}, 4).is_zero());
}

TEST_CASE("is_palindromic") {
  CHECK(is_palindromic(Polynomial{1, 0, 1, 1, 1, 1, 1, 0, 1}));
  CHECK_FALSE(is_palindromic(Polynomial{1, -1}));
  CHECK(is_palindromic(Polynomial{5}));
  CHECK_THROWS_AS(is_palindromic(Polynomial{}), ZeroPolynomial);
  // interior zeros count as coefficients: 1 + t^3 is palindromic, t + t^3 is not
  CHECK(is_palindromic(Polynomial{1, 0, 0, 1}));
  CHECK_FALSE(is_palindromic(Polynomial{0, 1, 0, 1}));
}

TEST_CASE("gcd") {
  CHECK(gcd(Polynomial{1, 0, -1}, Polynomial{1, 0, 0, -1}) == Polynomial{-1, 1});
  CHECK(gcd(Polynomial{2, 2}, Polynomial{}) == Polynomial{1, 1});
  CHECK(gcd(Polynomial{}, Polynomial{-3, 0, -6}) == Polynomial{1, 0, 2});
  CHECK(gcd(Polynomial{1, 0, 1}, Polynomial{1, 0, 0, 0, 1}) == Polynomial{1});
  CHECK_THROWS_AS(gcd(Polynomial{}, Polynomial{}), ZeroPolynomial);
}

TEST_CASE("gcd recovers a planted common factor") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial g = random_poly(rng, 5, 6);
    const Polynomial a = random_poly(rng, 6, 9);
    const Polynomial b = random_poly(rng, 6, 9);
    if (g.deg() == 0) continue;
    const Polynomial d = gcd(a * g, b * g);
    // g divides the gcd, and the gcd divides both inputs.
    CHECK_NOTHROW(exact_div(d * g.content(), g.primitive_part()));
    CHECK_NOTHROW(exact_div(a * g * d.leading(), d));
    CHECK(sgn(d.leading()) > 0);
    CHECK(d.content() == 1);
  }
}

TEST_CASE("gcd handles high degree without blowup") {
  // (1 - t^60)(1 + t^5) and (1 - t^84): gcd is 1 - t^12 up to normalization.
  const Polynomial a = (Polynomial{1} - Polynomial::monomial(1, 60)) * (Polynomial{1} + Polynomial::monomial(1, 5));
  const Polynomial b = Polynomial{1} - Polynomial::monomial(1, 84);
  CHECK(gcd(a, b) == Polynomial::monomial(1, 12) - Polynomial{1});
}

TEST_CASE("squarefree") {
  // (1 + t)^2 (1 - t)
  const Polynomial p = Polynomial{1, 1} * Polynomial{1, 1} * Polynomial{1, -1};
  const auto sf = squarefree(p);
  REQUIRE(sf.parts.size() == 2);
  CHECK(sf.parts[0] == SquareFreePart{Polynomial{-1, 1}, 1});
  CHECK(sf.parts[1] == SquareFreePart{Polynomial{1, 1}, 2});
  CHECK(sf.content == -1);

  const Polynomial q{1, 3, 0, 2};
  const auto single = squarefree(q);
  REQUIRE(single.parts.size() == 1);
  CHECK(single.parts[0] == SquareFreePart{q, 1});

  const Polynomial cube = Polynomial{1, 0, 1} * Polynomial{1, 0, 1} * Polynomial{1, 0, 1};
  const auto c = squarefree(cube);
  REQUIRE(c.parts.size() == 1);
  CHECK(c.parts[0] == SquareFreePart{Polynomial{1, 0, 1}, 3});

  CHECK(squarefree(Polynomial{-4}).parts.empty());
  CHECK_THROWS_AS(squarefree(Polynomial{}), ZeroPolynomial);
}

TEST_CASE("squarefree reconstructs its input") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    Polynomial p = random_poly(rng, 3, 5);
    const Polynomial f = random_poly(rng, 2, 4);
    if (p.is_zero() || f.is_zero()) continue;
    p *= f * f * random_poly(rng, 2, 3);
    if (p.is_zero()) continue;
    const auto sf = squarefree(p);
    Polynomial rebuilt = Polynomial::constant(sf.content);
    for (const auto& part : sf.parts) {
      CHECK(gcd(part.factor, part.factor.derivative()).deg() == 0);
      for (unsigned i = 0; i < part.multiplicity; ++i) rebuilt *= part.factor;
    }
    CHECK(rebuilt == p);
    for (std::size_t i = 0; i < sf.parts.size(); ++i) {
      for (std::size_t j = i + 1; j < sf.parts.size(); ++j) {
        CHECK(gcd(sf.parts[i].factor, sf.parts[j].factor).deg() == 0);
      }
    }
  }
}

TEST_CASE("to_symmetric") {
  CHECK(to_symmetric(Polynomial{1, 1, 1, 1, 1}) == Polynomial{-1, 1, 1});
  CHECK(to_symmetric(Polynomial{1, 0, 1}) == Polynomial{0, 1});
  CHECK(to_symmetric(Polynomial{2, 0, 3, 0, 2}) == Polynomial{-1, 0, 2});

  CHECK_THROWS_AS(to_symmetric(Polynomial{1, 2}), NotPalindromic);
  CHECK_THROWS_AS(to_symmetric(Polynomial{1, 1, 1, 1}), OddDegree);
  CHECK_THROWS_AS(to_symmetric(Polynomial{1, -2, 1}), RootAtUnity);
  CHECK_THROWS_AS(to_symmetric(Polynomial{1, 2, 1}), RootAtUnity);
}

TEST_CASE("to_symmetric round-trips on random palindromic input") {
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial p = random_palindromic(rng, 10, 9);
    if (p.deg() % 2 != 0 || sgn(p.eval(Integer(1))) == 0 || sgn(p.eval(Integer(-1))) == 0) continue;
    const Polynomial q = to_symmetric(p);
    CHECK(q.deg() == p.deg() / 2);
    CHECK(expand_symmetric(q) == p);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("palindromic and reversal properties") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_palindromic(rng, 6, 7);
    const Polynomial q = random_palindromic(rng, 6, 7);
    CHECK(is_palindromic(p * q));
    CHECK(p.reversed() == p);
    const Polynomial r = random_poly(rng, 8, 5);
    CHECK(is_palindromic(r) == (r.reversed() == r));
  }
}

TEST_CASE("mul and exact_div properties") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, 10, 20);
    const Polynomial q = random_poly(rng, 10, 20);
    const Polynomial r = random_poly(rng, 10, 20);
    CHECK((p * q).deg() == p.deg() + q.deg());
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(exact_div(p * q, q) == p);
  }
}

TEST_CASE("sturm_count") {
  CHECK(sturm_count(Polynomial{-1, 1, 1}, Rational(-2), Rational(2)) == 2);
  CHECK(sturm_count(Polynomial{-3, 1}, Rational(-2), Rational(2)) == 0);
  CHECK(sturm_count(Polynomial{-1, 0, 1}, Rational(-2), Rational(2)) == 2);
  CHECK(sturm_count(Polynomial{-1, 0, 1}, Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(Polynomial{-1, 0, 1}, Rational(-1, 2), Rational(1, 2)) == 0);
  CHECK(sturm_count(Polynomial{7}, Rational(-2), Rational(2)) == 0);

  CHECK_THROWS_AS(sturm_count(Polynomial{-1, 0, 1}, Rational(1), Rational(2)), EndpointIsRoot);
  CHECK_THROWS_AS(sturm_count(Polynomial{1, 2, 1}, Rational(-2), Rational(2)), NotSquareFree);
  CHECK_THROWS_AS(sturm_count(Polynomial{}, Rational(-2), Rational(2)), ZeroPolynomial);
}

TEST_CASE("sturm_count matches planted roots") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial q{1};
    std::vector<Rational> roots;
    const int n_roots = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n_roots; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      if (std::find(roots.begin(), roots.end(), r) != roots.end() || abs(r) == 2) continue;
      roots.push_back(r);
      q *= Polynomial(std::vector<Integer>{-r.get_num(), r.get_den()});
    }
    // no real roots
    q *= Polynomial{1 + static_cast<long>(rng() % 5), 0, 1};
    const std::size_t expected =
        std::count_if(roots.begin(), roots.end(), [](const Rational& r) { return r > -2 && r < 2; });
    CHECK(sturm_count(q, Rational(-2), Rational(2)) == expected);
  }
}

TEST_CASE("sturm_count agrees with a refined rational grid") {
  std::mt19937 rng(19);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Polynomial q = random_poly(rng, 12, 6);
    if (q.deg() == 0 || gcd(q, q.derivative()).deg() > 0) continue;
    if (q.sign_at(Rational(-2)) == 0 || q.sign_at(Rational(2)) == 0) continue;
    CHECK(sturm_count(q, Rational(-2), Rational(2)) == grid_root_count(q, Rational(-2), Rational(2)));
    ++checked;
  }
  CHECK(checked > 60);
}

TEST_CASE("sign_at agrees with rational evaluation") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, 9, 9);
    Rational x(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
    x.canonicalize();
    CHECK(p.sign_at(x) == sgn(p.eval(x)));
  }
}

TEST_CASE("to_string") {
  CHECK(Polynomial{}.to_string() == "0");
  CHECK(Polynomial{1, 0, 2, -1}.to_string() == "1 + 2t^2 - t^3");
  CHECK(Polynomial{0, -1}.to_string() == "-t");
}
