#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unimodal/errors.hpp"
#include "unimodal/singularity_catalog.hpp"

using namespace unimodal;

namespace {

// Weights of the variables and the weighted degree of the germ for each kind.
struct Weights {
  unsigned wx, wy, d;  // wy == 0 for one variable
};

Weights weights_of(const SimpleSingularity& s) {
  const unsigned p = static_cast<unsigned>(s.parameter);
  switch (s.kind) {
    case SingularityKind::A: return {2, 0, 2 * p + 2};
    case SingularityKind::D: return {p - 2, 2, 2 * p - 2};
    case SingularityKind::E6: return {4, 3, 12};
    case SingularityKind::E7: return {3, 2, 9};
    case SingularityKind::E8: return {5, 3, 15};
  }
  return {};
}

// prod_i (1 - t^(d - w_i)) / (1 - t^(w_i)) by truncated power series.
Polynomial algebra_oracle(const SimpleSingularity& s) {
  const Weights w = weights_of(s);
  std::vector<unsigned> ws{w.wx};
  if (w.wy != 0) ws.push_back(w.wy);
  unsigned top = 0;
  for (unsigned wi : ws) top += w.d - 2 * wi;
  std::vector<Integer> series(top + 1);
  series[0] = 1;
  for (unsigned wi : ws) {
    // multiply by 1 / (1 - t^wi) = 1 + t^wi + t^(2wi) + ...
    for (std::size_t i = wi; i <= top; ++i) series[i] += series[i - wi];
    // multiply by 1 - t^(d - wi)
    for (std::size_t i = top + 1; i-- > w.d - wi;) series[i] -= series[i - (w.d - wi)];
  }
  return Polynomial(std::move(series));
}

SimpleSingularity random_singularity(std::mt19937& rng, bool with_e6_e8) {
  switch (rng() % (with_e6_e8 ? 5 : 3)) {
    case 0: return SimpleSingularity::A(1 + static_cast<int>(rng() % 15));
    case 1: return SimpleSingularity::D(4 + static_cast<int>(rng() % 15));
    case 2: return SimpleSingularity::E7();
    case 3: return SimpleSingularity::E6();
    default: return SimpleSingularity::E8();
  }
}

SingularitySpec random_spec(std::mt19937& rng, bool with_e6_e8, int max_weight = 1) {
  std::vector<Summand> s;
  const int n = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) s.push_back({random_singularity(rng, with_e6_e8), 1 + static_cast<int>(rng() % max_weight)});
  return SingularitySpec(std::move(s));
}

}  // namespace

TEST_CASE("parse_spec") {
  const auto s = parse_spec("A8+E7");
  REQUIRE(s.summands().size() == 2);
  CHECK(s.summands()[0] == Summand{SimpleSingularity::A(8), 1});
  CHECK(s.summands()[1] == Summand{SimpleSingularity::E7(), 1});

  const auto t = parse_spec("2*E7+D10");
  REQUIRE(t.summands().size() == 3);
  CHECK(t.summands()[0].singularity == SimpleSingularity::D(10));
  CHECK(t.summands()[1].singularity == SimpleSingularity::E7());
  CHECK(t.summands()[2].singularity == SimpleSingularity::E7());
  CHECK(t.to_string() == "D10+2*E7");

  CHECK(parse_spec(" a2 + e7 ") == parse_spec("E7+A2"));
  CHECK(parse_spec("A2@2+E7").summands()[0] == Summand{SimpleSingularity::A(2), 2});
  CHECK(parse_spec("A2@2+E7").to_string() == "A2@2+E7");
  CHECK_FALSE(parse_spec("A2@2").unit_weights());
}

TEST_CASE("parse_spec rejects bad input") {
  CHECK_THROWS_AS(parse_spec("D3"), ParameterOutOfRange);
  CHECK_THROWS_AS(parse_spec("A0"), ParameterOutOfRange);
  CHECK_THROWS_AS(parse_spec("0*A2"), ParameterOutOfRange);
  CHECK_THROWS_AS(parse_spec("A10001"), ParameterOutOfRange);
  CHECK_THROWS_AS(parse_spec("A50", CatalogLimits{40}), ParameterOutOfRange);
  CHECK_THROWS_AS(parse_spec("E5"), ParameterOutOfRange);
  CHECK_THROWS_AS(parse_spec(""), SyntaxError);
  CHECK_THROWS_AS(parse_spec("A2+"), SyntaxError);
  CHECK_THROWS_AS(parse_spec("X2"), SyntaxError);
  CHECK_THROWS_AS(parse_spec("A"), SyntaxError);
  try {
    parse_spec("A2+Q7");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("parse_summands keeps the written order") {
  const auto s = parse_summands("E7+2*A3+D5");
  REQUIRE(s.size() == 4);
  CHECK(s[0].singularity == SimpleSingularity::E7());
  CHECK(s[1].singularity == SimpleSingularity::A(3));
  CHECK(s[2].singularity == SimpleSingularity::A(3));
  CHECK(s[3].singularity == SimpleSingularity::D(5));
}

TEST_CASE("poincare_algebra") {
  CHECK(poincare_algebra(SimpleSingularity::A(2)) == Polynomial{1, 0, 1});
  CHECK(poincare_algebra(SimpleSingularity::A(1)) == Polynomial{1});
  CHECK(poincare_algebra(SimpleSingularity::E7()) == Polynomial{1, 0, 1, 1, 1, 1, 1, 0, 1});
}

TEST_CASE("poincare_algebra agrees with the weighted-degree formula") {
  std::vector<SimpleSingularity> all{SimpleSingularity::E6(), SimpleSingularity::E7(), SimpleSingularity::E8()};
  for (int k = 1; k <= 40; ++k) all.push_back(SimpleSingularity::A(k));
  for (int m = 4; m <= 40; ++m) all.push_back(SimpleSingularity::D(m));
  for (const auto& s : all) {
    CAPTURE(s.to_string());
    const Polynomial p = poincare_algebra(s);
    CHECK(p == algebra_oracle(s));
    CHECK(p.eval(Integer(1)) == s.milnor_number());
  }
}

TEST_CASE("poincare_lie") {
  CHECK(poincare_lie(SimpleSingularity::A(3)) == Polynomial{1, 0, 1});
  CHECK(poincare_lie(SimpleSingularity::E7()) == Polynomial{1, 1, 1, 2, 1, 1, 1});
  CHECK(poincare_lie(SimpleSingularity::E7()) == Polynomial{1, 1} * Polynomial{1, 0, 1} * Polynomial{1, 0, 0, 1});
  CHECK(poincare_lie(SimpleSingularity::A(1)).is_zero());
  // (1 + t^0)(1 - t^4)/(1 - t^2) = 2 + 2t^2
  CHECK(poincare_lie(SimpleSingularity::D(4)) == Polynomial{2, 0, 2});
}

TEST_CASE("poincare_lie degree sits two below poincare_algebra") {
  std::vector<SimpleSingularity> all{SimpleSingularity::E7()};
  for (int k = 2; k <= 60; ++k) all.push_back(SimpleSingularity::A(k));
  for (int m = 4; m <= 60; ++m) all.push_back(SimpleSingularity::D(m));
  for (const auto& s : all) {
    CAPTURE(s.to_string());
    CHECK(poincare_lie(s).deg() + 2 == poincare_algebra(s).deg());
    CHECK(is_palindromic(poincare_lie(s)));
    CHECK(is_palindromic(poincare_algebra(s)));
  }
}

TEST_CASE("E6 and E8 Lie polynomials are not palindromic") {
  CHECK_FALSE(is_palindromic(poincare_lie(SimpleSingularity::E6())));
  CHECK_FALSE(is_palindromic(poincare_lie(SimpleSingularity::E8())));
  CHECK(is_palindromic(poincare_algebra(SimpleSingularity::E6())));
  CHECK(is_palindromic(poincare_algebra(SimpleSingularity::E8())));
}

TEST_CASE("combined_algebra") {
  CHECK(combined_algebra(parse_spec("A2+A3")) == Polynomial{1, 0, 2, 0, 2, 0, 1});
  CHECK(combined_algebra(parse_spec("A2")) == Polynomial{1, 0, 1});
  CHECK(combined_algebra(parse_spec("A2@2")) == Polynomial{1, 0, 0, 0, 1});
}

TEST_CASE("combined_lie") {
  CHECK(combined_lie(parse_spec("A2+A3")) == Polynomial{2, 0, 3, 0, 2});
  CHECK(combined_lie(parse_spec("A1+A1")).is_zero());
  CHECK(combined_lie(parse_spec("E7")) == Polynomial{1, 1} * Polynomial{1, 0, 1} * Polynomial{1, 0, 0, 1});
  CHECK(combined_lie(parse_spec("A1+A2")) == Polynomial{1});
}

TEST_CASE("E6 grading differs from A2+A3") {
  CHECK(combined_lie(parse_spec("E6")) != combined_lie(parse_spec("A2+A3")));
  CHECK(combined_algebra(parse_spec("E6")) != combined_algebra(parse_spec("A2+A3")));
  CHECK(combined_algebra(parse_spec("E6")).eval(Integer(1)) == combined_algebra(parse_spec("A2+A3")).eval(Integer(1)));
}

TEST_CASE("q_rational") {
  const auto a2 = q_rational(parse_spec("A2"));
  CHECK(a2.num == Polynomial{1});
  CHECK(a2.den == Polynomial{1, 0, 1});

  // P_L/P for E7 = (1+t)^2 (1+t^2) / (1 + t + ... + t^6) after cancelling (1+t^3)/(1-t^2)
  // against (1-t^7) = (1-t)(1+...+t^6).
  const auto e7 = q_rational(parse_spec("E7"));
  CHECK(e7.num == Polynomial{1, 1} * Polynomial{1, 1} * Polynomial{1, 0, 1});
  CHECK(e7.den == Polynomial{1, 1, 1, 1, 1, 1, 1});
  CHECK(e7.eval(Rational(1)) == Rational(8, 7));

  const auto a1 = q_rational(parse_spec("A1"));
  CHECK(a1.num.is_zero());
  CHECK(a1.den == Polynomial{1});
}

TEST_CASE("reduce") {
  const auto r = reduce(Polynomial{2, 2} * Polynomial{1, 0, 1}, Polynomial{-4, -4});
  CHECK(r.num == -Polynomial{1, 0, 1});
  CHECK(r.den == Polynomial{2});
  CHECK_THROWS_AS(reduce(Polynomial{1}, Polynomial{}), DivisionByZero);
}

TEST_CASE("Milnor number is P(S)(1) on random specs") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const auto spec = random_spec(rng, true);
    Integer product = 1;
    for (const auto& s : spec.summands()) product *= s.singularity.milnor_number();
    CHECK(combined_algebra(spec).eval(Integer(1)) == product);
  }
}

TEST_CASE("Block identity and palindromicity on random specs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto spec = random_spec(rng, trial % 3 == 0, trial % 2 == 0 ? 1 : 3);
    CAPTURE(spec.to_string());
    const Polynomial lie = combined_lie(spec);
    const Polynomial alg = combined_algebra(spec);
    const auto q = q_rational(spec);
    CHECK(lie * q.den == q.num * alg);
    if (!q.num.is_zero()) CHECK(gcd(q.num, q.den).deg() == 0);
    CHECK(sgn(q.den.leading()) > 0);

    const bool in_scope = theorem_scope(spec) != TheoremScope::out_of_scope;
    if (in_scope && !lie.is_zero()) {
      CHECK(is_palindromic(lie));
      CHECK(q.num.deg() + 2 == q.den.deg());
    }
  }
}

TEST_CASE("palindromic with equal non-unit weights") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    auto spec = random_spec(rng, false);
    const int w = 2 + static_cast<int>(rng() % 3);
    std::vector<Summand> s = spec.summands();
    for (auto& x : s) x.weight = w;
    const Polynomial lie = combined_lie(SingularitySpec(s));
    if (!lie.is_zero()) CHECK(is_palindromic(lie));
  }
}

TEST_CASE("theorem_scope") {
  CHECK(theorem_scope(parse_spec("A3+D5")) == TheoremScope::A_D);
  CHECK(theorem_scope(parse_spec("A3+2*E7")) == TheoremScope::A_D_E7);
  CHECK(theorem_scope(parse_spec("E7")) == TheoremScope::A_D_E7);
  CHECK(theorem_scope(parse_spec("A3+E6")) == TheoremScope::out_of_scope);
  CHECK(theorem_scope(parse_spec("A3@2")) == TheoremScope::out_of_scope);
}
