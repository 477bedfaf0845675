#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jackclust/errors.hpp"
#include "jackclust/mpoly/monomial.hpp"

namespace jackclust {

// Sparse polynomial in z_1..z_N over a scalar ring S. Terms are kept in strictly
// descending grlex order with no zero coefficients. S needs S(long), +, -, *, ==
// and is_zero(); BigRational, FieldElement and ParamPoly all qualify.
template <class S>
class MPoly {
 public:
  using Scalar = S;
  using Term = std::pair<Monomial, S>;

  explicit MPoly(int nvars = 0) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::out_of_range("MPoly: bad variable count");
  }
  static MPoly constant(int nvars, const S& c) {
    MPoly r(nvars);
    if (!c.is_zero()) r.terms_.push_back({Monomial(), c});
    return r;
  }
  static MPoly variable(int nvars, int i, const S& c = S(1)) {
    Monomial m;
    m.set(i, 1);
    return monomial(nvars, m, c);
  }
  static MPoly monomial(int nvars, const Monomial& m, const S& c = S(1)) {
    MPoly r(nvars);
    r.check_monomial(m);
    if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
  }
  // Builds from arbitrary (possibly repeated) terms.
  static MPoly from_terms(int nvars, std::vector<Term> terms) {
    MPoly r(nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
    for (auto& t : terms) {
      if (!r.terms_.empty() && r.terms_.back().first == t.first) {
        r.terms_.back().second = r.terms_.back().second + t.second;
      } else {
        r.terms_.push_back(std::move(t));
      }
    }
    r.prune();
    return r;
  }
  // Trusted constructor for terms already sorted, unique and nonzero.
  static MPoly from_sorted_terms(int nvars, std::vector<Term> terms) {
    MPoly r(nvars);
    r.terms_ = std::move(terms);
    return r;
  }

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.first.degree() != terms_.front().first.degree()) return false;
    return true;
  }

  S coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return grlex_greater(t.first, x); });
    if (it != terms_.end() && it->first == m) return it->second;
    return S(0);
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.second = S(0) - t.second;
    return r;
  }
  MPoly& operator+=(const MPoly& o) { return *this = merge(*this, o, false); }
  MPoly& operator-=(const MPoly& o) { return *this = merge(*this, o, true); }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const S& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second = t.second * c;
    return *this;
  }
  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
  friend MPoly operator*(MPoly a, const S& c) { return a *= c; }
  friend MPoly operator*(const S& c, MPoly a) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return MPoly(a.nvars_);
    if (a.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
    if (b.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
    std::unordered_map<Monomial, S, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        Monomial m = x.first * y.first;
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(m, x.second * y.second);
        } else {
          it->second = it->second + x.second * y.second;
        }
      }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& kv : acc)
      if (!kv.second.is_zero()) terms.emplace_back(kv.first, std::move(kv.second));
    std::sort(terms.begin(), terms.end(),
              [](const Term& p, const Term& q) { return grlex_greater(p.first, q.first); });
    return from_sorted_terms(a.nvars_, std::move(terms));
  }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly mul_term(const Monomial& m, const S& c) const {
    MPoly r(nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      S v = t.second * c;
      if (!v.is_zero()) r.terms_.push_back({t.first * m, std::move(v)});
    }
    return r;
  }

  MPoly pow(unsigned e) const {
    MPoly result = constant(nvars_, S(1)), base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  // Same polynomial viewed in more (or, if unused, fewer) variables.
  MPoly with_nvars(int n) const {
    MPoly r(n);
    r.terms_ = terms_;
    for (const auto& t : terms_) r.check_monomial(t.first);
    return r;
  }

  template <class F>
  auto map_coefficients(F&& fn) const -> MPoly<decltype(fn(std::declval<const S&>()))> {
    using T = decltype(fn(std::declval<const S&>()));
    std::vector<typename MPoly<T>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      T v = fn(t.second);
      if (!v.is_zero()) out.emplace_back(t.first, std::move(v));
    }
    return MPoly<T>::from_sorted_terms(nvars_, std::move(out));
  }

 private:
  void check_monomial(const Monomial& m) const {
    for (int i = nvars_; i < kMaxVars; ++i)
      if (m[i] != 0) throw std::out_of_range("monomial uses a variable beyond nvars");
  }
  void prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_zero(); }),
                 terms_.end());
  }
  static void check_same(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
  }
  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    check_same(a, b);
    MPoly r(a.nvars_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && grlex_greater(a.terms_[i].first, b.terms_[j].first))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || grlex_greater(b.terms_[j].first, a.terms_[i].first)) {
        r.terms_.push_back({b.terms_[j].first, subtract ? S(0) - b.terms_[j].second : b.terms_[j].second});
        ++j;
      } else {
        S c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].first, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  int nvars_;
  std::vector<Term> terms_;
};

// Hash-map accumulator for building polynomials term by term.
template <class S>
class TermAccumulator {
 public:
  explicit TermAccumulator(int nvars) : nvars_(nvars) {}
  void add(const Monomial& m, const S& c) {
    if (c.is_zero()) return;
    auto it = acc_.find(m);
    if (it == acc_.end()) {
      acc_.emplace(m, c);
    } else {
      it->second = it->second + c;
    }
  }
  void add(const MPoly<S>& f, const S& scale = S(1)) {
    for (const auto& t : f.terms()) add(t.first, t.second * scale);
  }
  std::size_t size() const { return acc_.size(); }
  MPoly<S> finish() {
    std::vector<typename MPoly<S>::Term> terms;
    terms.reserve(acc_.size());
    for (auto& kv : acc_)
      if (!kv.second.is_zero()) terms.emplace_back(kv.first, std::move(kv.second));
    acc_.clear();
    std::sort(terms.begin(), terms.end(),
              [](const auto& p, const auto& q) { return grlex_greater(p.first, q.first); });
    return MPoly<S>::from_sorted_terms(nvars_, std::move(terms));
  }

 private:
  int nvars_;
  std::unordered_map<Monomial, S, MonomialHash> acc_;
};

template <class S>
struct DivisionResult {
  std::optional<MPoly<S>> quotient;  // set iff the division is exact
  MPoly<S> remainder;                // nonzero witness when not exact
  bool exact() const { return quotient.has_value(); }
};

// Multivariate division by a single divisor over a field S (needs operator/).
// The remainder is zero iff g divides f.
template <class S>
DivisionResult<S> exact_divide(const MPoly<S>& f, const MPoly<S>& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.nvars() != g.nvars()) throw std::invalid_argument("exact_divide: variable count mismatch");
  const int n = f.nvars();
  const Monomial lg = g.leading().first;
  const S lc = g.leading().second;
  if (g.size() == 1) {
    std::vector<typename MPoly<S>::Term> q, rem;
    for (const auto& t : f.terms()) {
      if (lg.divides(t.first)) {
        q.emplace_back(lg.quotient_of(t.first), t.second / lc);
      } else {
        rem.push_back(t);
      }
    }
    if (!rem.empty()) return {std::nullopt, MPoly<S>::from_sorted_terms(n, std::move(rem))};
    return {MPoly<S>::from_sorted_terms(n, std::move(q)), MPoly<S>(n)};
  }
  std::map<Monomial, S, GrlexGreater> work;
  for (const auto& t : f.terms()) work.emplace_hint(work.end(), t.first, t.second);
  std::vector<typename MPoly<S>::Term> q, rem;
  while (!work.empty()) {
    auto top = work.begin();
    if (!lg.divides(top->first)) {
      rem.push_back(*top);
      work.erase(top);
      continue;
    }
    Monomial m = lg.quotient_of(top->first);
    S c = top->second / lc;
    work.erase(top);
    for (std::size_t k = 1; k < g.size(); ++k) {
      const auto& gt = g.terms()[k];
      Monomial mm = gt.first * m;
      S delta = gt.second * c;
      auto it = work.find(mm);
      if (it == work.end()) {
        work.emplace(mm, S(0) - delta);
      } else {
        it->second = it->second - delta;
        if (it->second.is_zero()) work.erase(it);
      }
    }
    q.emplace_back(m, std::move(c));
  }
  if (!rem.empty()) return {std::nullopt, MPoly<S>::from_sorted_terms(n, std::move(rem))};
  return {MPoly<S>::from_sorted_terms(n, std::move(q)), MPoly<S>(n)};
}

// Division that must be exact by construction.
template <class S>
MPoly<S> divide_or_throw(const MPoly<S>& f, const MPoly<S>& g, const char* context) {
  auto r = exact_divide(f, g);
  if (!r.exact()) throw InternalDivisionError(std::string("non-exact division in ") + context);
  return std::move(*r.quotient);
}

}  // namespace jackclust
