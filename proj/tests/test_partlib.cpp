#include <deque>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "jackclust/errors.hpp"
#include "jackclust/partlib/eigenvalues.hpp"
#include "jackclust/partlib/kappa.hpp"
#include "jackclust/partlib/orders.hpp"

using namespace jackclust;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

FieldElement alpha() { return FieldElement::indeterminate(Param::alpha, mask_of(Param::alpha)); }

// Every composition reachable from eta by swaps eta_i > eta_j with i < j.
std::set<Composition> bruhat_closure(const Composition& eta) {
  std::set<Composition> seen{eta};
  std::deque<Composition> todo{eta};
  while (!todo.empty()) {
    Composition c = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (c[i] > c[j]) {
          Composition d = c;
          std::swap(d[i], d[j]);
          if (seen.insert(d).second) todo.push_back(d);
        }
  }
  return seen;
}

}  // namespace

TEST_CASE("dominance examples") {
  CHECK(dominance_less(P({1, 1, 0}), P({2, 0, 0})));
  CHECK_FALSE(dominance_less(P({2, 0, 0}), P({1, 1, 0})));
  CHECK(dominance_less(P({2, 1, 1}), P({2, 2, 0})));
  CHECK_THROWS(dominance_less(P({2, 0}), P({1, 0})));
}

TEST_CASE("dominance is a strict partial order") {
  auto parts = partitions_below(P({4, 2, 0, 0}).shifted(0));
  auto all = partitions_below(P({8, 0, 0, 0}));
  for (const auto& a : all) {
    CHECK_FALSE(dominance_less(a, a));
    for (const auto& b : all) {
      if (dominance_less(a, b)) CHECK_FALSE(dominance_less(b, a));
      for (const auto& c : all)
        if (dominance_less(a, b) && dominance_less(b, c)) CHECK(dominance_less(a, c));
    }
  }
  for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i] < parts[i - 1]);
}

TEST_CASE("partitions below are exactly the dominated partitions") {
  Partition kappa = P({4, 2, 1, 0});
  auto below = partitions_below(kappa);
  CHECK(below.front() == kappa);
  std::set<Partition> got(below.begin(), below.end());
  for (const auto& mu : partitions_below(P({7, 0, 0, 0}))) {
    bool expect = mu == kappa || dominance_less(mu, kappa);
    CHECK(got.count(mu) == (expect ? 1u : 0u));
  }
}

TEST_CASE("bruhat examples") {
  CHECK(bruhat_less({0, 1}, {1, 0}));
  CHECK_FALSE(bruhat_less({1, 0}, {0, 1}));
  CHECK(bruhat_less({1, 1, 0}, {2, 0, 0}));
  CHECK_FALSE(bruhat_less({2, 0, 0}, {2, 0, 0}));
}

TEST_CASE("bruhat criterion matches swap reachability") {
  for (const auto& mu : {P({2, 1, 0, 0}), P({3, 1, 1, 0}), P({2, 2, 1, 0}), P({3, 2, 1, 0})}) {
    for (const auto& eta : rearrangements(mu)) {
      auto reach = bruhat_closure(eta);
      for (const auto& nu : rearrangements(mu)) CHECK(bruhat_less(nu, eta) == (nu != eta && reach.count(nu) > 0));
    }
  }
}

TEST_CASE("composition enumeration is a linear extension") {
  Composition eta{1, 0, 2};
  auto below = compositions_below(eta);
  CHECK(below.front() == eta);
  for (std::size_t i = 0; i < below.size(); ++i) {
    if (i) CHECK(bruhat_less(below[i], eta));
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(bruhat_less(below[j], below[i]));
  }
  CHECK(compositions_below({0, 1}).size() == 1);
  CHECK(compositions_below({1, 0}).size() == 2);
}

TEST_CASE("frequency notation round trips") {
  CHECK(P({2, 1, 1, 1, 0, 0}).frequencies() == std::vector<int>{2, 3, 1});
  std::mt19937 rng(4);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<int> v(6);
    for (auto& x : v) x = static_cast<int>(rng() % 7);
    Partition p = sorted_partition(v);
    CHECK(Partition::from_frequencies(p.frequencies()) == p);
  }
  CHECK(parse_partition("[1,0,1,0,1]") == P({4, 2, 0}));
  CHECK(parse_partition("4,2", 4) == P({4, 2, 0, 0}));
  CHECK_THROWS_AS(parse_partition("2,3"), ParseError);
  CHECK_THROWS_AS(parse_partition("[1,x]"), ParseError);
}

TEST_CASE("staircase constructor") {
  KappaSpec a = build_kappa(1, 2, 1, 1, 1);
  CHECK(a.kappa == P({4, 2, 0}));
  CHECK(a.n == 3);
  CHECK(a.alpha == BigRational(-2));
  CHECK(build_kappa(1, 2, 1, 1, 2).kappa == P({6, 4, 2, 0}));
  KappaSpec b = build_kappa(1, 2, 2, 1, 1);
  CHECK(b.kappa == P({5, 3, 0, 0, 0}));
  CHECK(b.kappa.frequencies() == std::vector<int>{3, 0, 0, 1, 0, 1});
  CHECK(b.n == 5);
  KappaSpec c = build_kappa(2, 2, 1, 2, 0);
  CHECK(c.kappa == P({2, 2, 0, 0}));
  CHECK(c.alpha == BigRational(-3));
  for (int k = 1; k <= 3; ++k)
    for (int r = 2; r <= 4; ++r)
      for (int s = 1; s <= 2; ++s)
        for (int m = 1; m <= k; ++m)
          for (int blocks = 0; blocks <= 2; ++blocks) {
            if (std::gcd(k + 1, r - 1) != 1) {
              CHECK_THROWS(build_kappa(k, r, s, m, blocks));
              continue;
            }
            KappaSpec spec = build_kappa(k, r, s, m, blocks);
            CHECK(spec.n - spec.kappa.length() == (k + 1) * s - 1);
          }
  CHECK_THROWS(build_kappa(2, 2, 1, 3, 0));
  CHECK(reduced_kappa(b.kappa) == P({2, 0}));
}

TEST_CASE("jack eigenvalues") {
  FieldElement al = alpha();
  CHECK(eigen_jack_sym(P({0, 0, 0})) == FieldElement(0));
  CHECK(eigen_jack_sym(P({2, 0})) == FieldElement(2) * al + 4);
  CHECK(eigen_jack_sym(P({1, 1})) == FieldElement(2));
  CHECK(eigen_jack_nonsym({1, 0}, 0) == al);
  CHECK(eigen_jack_nonsym({1, 0}, 1) == FieldElement(-1));
  for (int i = 0; i < 4; ++i) CHECK(eigen_jack_nonsym({0, 0, 0, 0}, i) == FieldElement(-i));
  // The solver's convention is α·e(κ; 1/α).
  for (const auto& kappa : partitions_below(P({3, 1, 0}))) {
    FieldElement lhs = FieldElement::from_poly(sutherland_eigenvalue(kappa), mask_of(Param::alpha));
    FieldElement rhs = al * eigen_jack_sym(kappa).specialize({{Param::alpha, al.inverse()}});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("macdonald eigenvalues") {
  const ParamMask qt = mask_of(Param::q) | mask_of(Param::t);
  FieldElement q = FieldElement::indeterminate(Param::q, qt), t = FieldElement::indeterminate(Param::t, qt);
  CHECK(eigen_macdonald_sym(P({0, 0})) == t + 1);
  CHECK(eigen_macdonald_sym(P({1, 0})) == q * t + 1);
  CHECK(eigen_macdonald_nonsym({1, 0}, 0) == q);
  CHECK(eigen_macdonald_nonsym({0, 1}, 0) == t.inverse());
  CHECK(l_prime({0, 1}, 0) == 1);
  CHECK(l_prime_minus({0, 1}, 0) == -1);
  CHECK(l_prime({0, 0, 1}, 1) == 2);
}
