#include <random>

#include "doctest.h"
#include "jackclust/mpoly/serialize.hpp"
#include "jackclust/mpoly/special.hpp"

using namespace jackclust;

namespace {

Poly z(int n, int i) { return Poly::variable(n, i); }
Poly c(int n, const FieldElement& v) { return Poly::constant(n, v); }

Poly random_poly(std::mt19937& rng, int n, int terms, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg), coef(-9, 9);
  std::vector<Poly::Term> out;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(n);
    for (auto& x : e) x = deg(rng);
    out.emplace_back(Monomial::from_exponents(e), FieldElement(coef(rng)));
  }
  return Poly::from_terms(n, out);
}

}  // namespace

TEST_CASE("arithmetic examples") {
  Poly z1 = z(2, 0), z2 = z(2, 1);
  CHECK((z1 + z2) * (z1 - z2) == z1 * z1 - z2 * z2);
  CHECK(z1 + Poly(2) == z1);
  Poly m1 = monomial_symmetric<FieldElement>(2, {1});
  CHECK(m1 * m1 == monomial_symmetric<FieldElement>(2, {2}) + c(2, 2) * monomial_symmetric<FieldElement>(2, {1, 1}));
}

TEST_CASE("exact division examples") {
  Poly z1 = z(2, 0), z2 = z(2, 1);
  auto r = exact_divide(z1 * z1 - z2 * z2, z1 - z2);
  REQUIRE(r.exact());
  CHECK(*r.quotient == z1 + z2);
  auto bad = exact_divide(z1 * z1 - z2 * z2, z1 + c(2, 2) * z2);
  CHECK_FALSE(bad.exact());
  CHECK_FALSE(bad.remainder.is_zero());
  Poly d = vandermonde<FieldElement>(3);
  auto sq = exact_divide(d * d, d);
  REQUIRE(sq.exact());
  CHECK(*sq.quotient == d);
}

TEST_CASE("divided differences") {
  Poly z1 = z(2, 0), z2 = z(2, 1);
  CHECK(divided_difference(z1 * z1, 0, 1) == z1 + z2);
  std::mt19937 rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    Poly f = random_poly(rng, 3, 6, 4);
    Poly num = f - swap_variables(f, 0, 2);
    auto q = exact_divide(num, z(3, 0) - z(3, 2));
    REQUIRE(q.exact());
    CHECK(*q.quotient == divided_difference(f, 0, 2));
  }
}

TEST_CASE("operator tags") {
  FieldElement q = FieldElement::indeterminate(Param::q, mask_of(Param::q) | mask_of(Param::t));
  Poly z1 = z(2, 0), z2 = z(2, 1);
  CHECK(q_shift(z1 * z2, 0, q) == c(2, q) * z1 * z2);
  CHECK(reflect_variable(z1 * z1 * z2, 0) == z1 * z1 * z2);
  CHECK(reflect_variable(z1 * z2, 0) == -(z1 * z2));
  CHECK(partial_derivative(z1 * z1 * z2, 0) == c(2, 2) * z1 * z2);
  CHECK(euler_operator(z1 * z1 * z2, 0) == c(2, 2) * z1 * z1 * z2);
}

TEST_CASE("symmetrization") {
  Poly z1 = z(2, 0), z2 = z(2, 1);
  CHECK(symmetrize(z1 * z1) == z1 * z1 + z2 * z2);
  CHECK(antisymmetrize(z1) == z1 - z2);
  CHECK(antisymmetrize(z1 * z1 * z2 * z2).is_zero());
  std::mt19937 rng(11);
  for (int iter = 0; iter < 10; ++iter) {
    Poly f = random_poly(rng, 3, 4, 3);
    Poly s = symmetrize(f);
    CHECK(symmetrize(s) == c(3, 6) * s);
    CHECK(antisymmetrize(s).is_zero());
    CHECK(is_symmetric(s));
  }
}

TEST_CASE("special products") {
  CHECK(vandermonde<FieldElement>(2) == z(2, 0) - z(2, 1));
  FieldElement t = FieldElement::indeterminate(Param::t, mask_of(Param::t));
  CHECK(t_vandermonde<FieldElement>(2, t) == c(2, t) * z(2, 0) - z(2, 1));
  FieldElement q = FieldElement::indeterminate(Param::q, mask_of(Param::q));
  Poly expected = (c(2, q) * z(2, 1) - z(2, 0)) * (c(2, q) * z(2, 0) - z(2, 1));
  CHECK(d1_product<FieldElement>(2, q) == expected);
}

TEST_CASE("pfaffian products") {
  CHECK(pfaffian_product<FieldElement>(2) == Poly::constant(2, FieldElement(1)));
  CHECK_THROWS(pfaffian_product<FieldElement>(3));
  // Hand expansion over the three matchings of {1,2,3,4}.
  int n = 4;
  auto d = [&](int a, int b) { return z(n, a) - z(n, b); };
  Poly expected = d(0, 2) * d(0, 3) * d(1, 2) * d(1, 3) - d(0, 1) * d(0, 3) * d(1, 2) * d(2, 3) +
                  d(0, 1) * d(0, 2) * d(1, 3) * d(2, 3);
  Poly pf = pfaffian_product<FieldElement>(4);
  CHECK(pf == expected);
  CHECK(pf.total_degree() == 4);
  CHECK(is_symmetric(pf));
}

TEST_CASE("substitution") {
  Poly f = z(3, 0) * z(3, 1) + z(3, 2);
  std::vector<VarReplacement<FieldElement>> plan{{FieldElement(1), 0}, {FieldElement(1), 1}, {FieldElement(1), 1}};
  Poly g = substitute(f, plan, 2);
  CHECK(g == z(2, 0) * z(2, 1) + z(2, 1));
  Poly d = vandermonde<FieldElement>(2);
  std::vector<VarReplacement<FieldElement>> same{{FieldElement(1), 0}, {FieldElement(1), 0}};
  CHECK(substitute(d, same, 2).is_zero());
  std::mt19937 rng(3);
  Poly h = symmetrize(random_poly(rng, 3, 3, 2));
  std::vector<VarReplacement<FieldElement>> scaled{{FieldElement(2), 0}, {FieldElement(1), 3}, {FieldElement(-1), 3}};
  for (const auto& t : h.terms()) {
    Poly one = Poly::monomial(3, t.first, t.second);
    CHECK(substitute(one, scaled, 4).is_homogeneous());
  }
}

TEST_CASE("translation and evaluation") {
  Poly f = z(2, 0) * z(2, 1);
  Poly g = translate(f, {FieldElement(1), FieldElement(1)});
  CHECK(g == z(2, 0) * z(2, 1) + z(2, 0) + z(2, 1) + c(2, 1));
  CHECK(evaluate(g, {FieldElement(1), FieldElement(2)}) == FieldElement(6));
}

TEST_CASE("canonical serialization round trip") {
  FieldElement al = FieldElement::indeterminate(Param::alpha, mask_of(Param::alpha));
  Poly p = monomial_symmetric<FieldElement>(2, {2}) + c(2, FieldElement(2) / (al + 1)) * z(2, 0) * z(2, 1);
  std::string s = serialize(p);
  CHECK(deserialize_poly(s) == p);
  std::string truncated = s.substr(0, s.rfind("end"));
  CHECK_THROWS_AS(deserialize_poly(truncated), ParseError);
  CHECK(pretty(p) == "z1^2 + (2/(alpha + 1))*z1*z2 + z2^2");
}
