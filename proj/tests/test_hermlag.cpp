#include <random>

#include "doctest.h"
#include "jackclust/errors.hpp"
#include "jackclust/hermlag/hermlag.hpp"
#include "jackclust/jackcore/jack_operators.hpp"
#include "jackclust/partlib/orders.hpp"

using namespace jackclust;

namespace {

const ParamMask kAlpha = mask_of(Param::alpha);
const ParamMask kAA = mask_of(Param::alpha) | mask_of(Param::a);

Poly x(int n, int i) { return Poly::variable(n, i); }
Poly c(int n, const FieldElement& v) { return Poly::constant(n, v); }

Poly random_poly(std::mt19937& rng, int n, int terms, int maxdeg, bool even) {
  std::uniform_int_distribution<int> deg(0, maxdeg), coef(-5, 5);
  std::vector<Poly::Term> out;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(n);
    for (auto& v : e) v = even ? 2 * deg(rng) : deg(rng);
    out.emplace_back(Monomial::from_exponents(e), FieldElement(coef(rng)));
  }
  return Poly::from_terms(n, out);
}

// Physicists' Hermite polynomials from H_{n+1} = 2z H_n − 2n H_{n−1}.
std::vector<Poly> hermite_recurrence(int top) {
  std::vector<Poly> h{c(1, 1), c(1, 2) * x(1, 0)};
  for (int n = 1; n < top; ++n) h.push_back(c(1, 2) * x(1, 0) * h[n] - c(1, 2 * n) * h[n - 1]);
  return h;
}

// Classical Laguerre L_n^{(a)} from (n+1)L_{n+1} = (2n+1+a−x)L_n − (n+a)L_{n−1}.
std::vector<Poly> laguerre_recurrence(int top) {
  FieldElement a = FieldElement::indeterminate(Param::a, kAA);
  std::vector<Poly> l{c(1, FieldElement(1).with_field(kAA)), c(1, a + 1) - x(1, 0)};
  for (int n = 1; n < top; ++n) {
    Poly next = (c(1, a + FieldElement(2 * n + 1)) - x(1, 0)) * l[n] - c(1, a + FieldElement(n)) * l[n - 1];
    l.push_back(next * FieldElement::rational(1, n + 1));
  }
  return l;
}

}  // namespace

TEST_CASE("type B Laplacian examples") {
  DunklConfig cfg{DunklType::B, AlphaMode::generic(), LaguerreParam::symbolic()};
  FieldElement a = FieldElement::indeterminate(Param::a, kAA);
  CHECK(laplacian_apply(x(1, 0) * x(1, 0), cfg) == c(1, FieldElement(4) * a + 4));
  CHECK_THROWS_AS(laplacian_apply(x(1, 0), cfg), std::invalid_argument);
  CHECK_THROWS_AS(laplacian_apply(x(2, 0) * x(2, 0) * x(2, 1), cfg), std::invalid_argument);
}

TEST_CASE("one-variable families match classical recurrences") {
  auto h = hermite_recurrence(6);
  for (int d = 0; d <= 6; ++d) {
    Poly got = hermite_nonsymmetric({d}, AlphaMode::generic());
    CHECK(got == h[d] * FieldElement(BigRational(2).pow(-d)).with_field(kAlpha));
  }
  CHECK(hermite_symmetric(Partition({2}), AlphaMode::generic()) == x(1, 0) * x(1, 0) - c(1, FieldElement::rational(1, 2)));

  auto l = laguerre_recurrence(5);
  FieldElement fact(1);
  for (int d = 0; d <= 5; ++d) {
    if (d > 0) fact = fact * FieldElement(d);
    Poly got = laguerre_nonsymmetric({d}, AlphaMode::generic(), LaguerreParam::symbolic());
    FieldElement sign = d % 2 ? FieldElement(-1) : FieldElement(1);
    CHECK(got == l[d] * (sign * fact).with_field(kAA));
  }
  FieldElement a = FieldElement::indeterminate(Param::a, kAA);
  CHECK(laguerre_symmetric(Partition({1}), AlphaMode::generic(), LaguerreParam::symbolic()) == x(1, 0) - c(1, a + 1));
}

TEST_CASE("hand-computed two-variable Hermite") {
  FieldElement al = FieldElement::indeterminate(Param::alpha, kAlpha);
  Poly got = hermite_symmetric(Partition({1, 1}), AlphaMode::generic());
  CHECK(got == x(2, 0) * x(2, 1) + c(2, FieldElement(1) / (FieldElement(2) * al)));
}

TEST_CASE("Dunkl operators commute") {
  std::mt19937 rng(21);
  for (DunklType type : {DunklType::A, DunklType::B}) {
    DunklConfig cfg{type, AlphaMode::generic(), LaguerreParam::symbolic()};
    for (int iter = 0; iter < 6; ++iter) {
      Poly f = random_poly(rng, 3, 4, 3, false);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          CHECK(dunkl_apply(dunkl_apply(f, cfg, i), cfg, j) == dunkl_apply(dunkl_apply(f, cfg, j), cfg, i));
    }
  }
}

TEST_CASE("Laplacians preserve symmetry and parity") {
  std::mt19937 rng(4);
  DunklConfig b{DunklType::B, AlphaMode::at(BigRational(3, 2)), LaguerreParam::at(BigRational(1, 3))};
  for (int iter = 0; iter < 5; ++iter) {
    Poly f = symmetrize(random_poly(rng, 3, 3, 2, true));
    Poly g = laplacian_apply(f, b);
    CHECK(is_symmetric(g));
    CHECK_NOTHROW(EvenPoly::from_y(g));
  }
}

TEST_CASE("Laguerre operator route agrees with the binomial expansion") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 2; ++d)
      for (const auto& kappa : partitions_below(Partition::padded({d}, n))) {
        if (kappa.modulus() != d) continue;
        Poly op = laguerre_symmetric(kappa, AlphaMode::generic(), LaguerreParam::symbolic());
        Poly bin = laguerre_binomial(kappa, AlphaMode::generic(), LaguerreParam::symbolic());
        CHECK_MESSAGE(op == bin, kappa.to_string());
      }
  // One specialized case at larger degree.
  Partition k = Partition({2, 1, 0});
  AlphaMode m = AlphaMode::at(BigRational(2));
  CHECK(laguerre_symmetric(k, m, LaguerreParam::at(BigRational(1, 2))) ==
        laguerre_binomial(k, m, LaguerreParam::at(BigRational(1, 2))));
}

TEST_CASE("Laguerre leading term is the Jack polynomial") {
  Partition k = Partition({2, 1, 0});
  Poly lag = laguerre_symmetric(k, AlphaMode::generic(), LaguerreParam::symbolic());
  Poly jack = lift_field(jack_symmetric(k, AlphaMode::generic()), kAA);
  Poly top(3);
  for (const auto& t : lag.terms())
    if (t.first.degree() == 3) top += Poly::monomial(3, t.first, t.second);
  CHECK(top == jack);
}

TEST_CASE("highest weight Jack polynomials coincide with their Hermite and Laguerre deformations") {
  auto hw = verify_hw_coincidence(Partition({4, 2, 0}), AlphaMode::at(BigRational(-2)));
  CHECK(hw.highest_weight);
  CHECK(hw.laguerre_equal);
  CHECK(hw.hermite_equal);
  auto other = verify_hw_coincidence(Partition({2, 0}), AlphaMode::at(BigRational(2)));
  CHECK_FALSE(other.highest_weight);
  CHECK_FALSE(other.hermite_equal);
}
