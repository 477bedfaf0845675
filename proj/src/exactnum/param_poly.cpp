#include "jackclust/exactnum/param_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jackclust/errors.hpp"

namespace jackclust {

namespace {
constexpr const char* kNames[kParamCount] = {"alpha", "a", "q", "t", "p"};

bool term_greater(const ParamPoly::Term& x, const ParamPoly::Term& y) {
  return pmono::greater(x.mono, y.mono);
}
}  // namespace

const char* param_name(Param v) { return kNames[static_cast<int>(v)]; }

std::optional<Param> param_from_name(const std::string& name) {
  for (int v = 0; v < kParamCount; ++v)
    if (name == kNames[v]) return static_cast<Param>(v);
  return std::nullopt;
}

std::string mask_to_string(ParamMask m) {
  std::string out;
  for (int v = 0; v < kParamCount; ++v) {
    if (!(m & (1u << v))) continue;
    if (!out.empty()) out += ',';
    out += kNames[v];
  }
  return out.empty() ? "Q" : out;
}

ParamMask mask_from_string(const std::string& text) {
  if (text == "Q" || text.empty()) return 0;
  ParamMask m = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto v = param_from_name(item);
    if (!v) throw ParseError("unknown parameter '" + item + "'");
    m |= mask_of(*v);
  }
  return m;
}

namespace pmono {

uint64_t guard_bits() {
  uint64_t g = 0;
  for (int v = 0; v < kParamCount; ++v) g |= uint64_t{1} << (shift(v) + kBits - 1);
  return g;
}

uint64_t make(Param v, int e) {
  if (e < 0 || e > kMaxExponent) throw std::overflow_error("parameter exponent out of range");
  return static_cast<uint64_t>(e) << shift(static_cast<int>(v));
}

int degree(uint64_t m) {
  int d = 0;
  for (int v = 0; v < kParamCount; ++v) d += exponent(m, v);
  return d;
}

uint64_t mul(uint64_t a, uint64_t b) {
  uint64_t s = a + b;
  if (s & guard_bits()) throw std::overflow_error("parameter exponent overflow");
  return s;
}

bool divides(uint64_t a, uint64_t b) {
  const uint64_t g = guard_bits();
  return (((b | g) - a) & g) == g;
}

uint64_t gcd(uint64_t a, uint64_t b) {
  uint64_t r = 0;
  for (int v = 0; v < kParamCount; ++v)
    r |= static_cast<uint64_t>(std::min(exponent(a, v), exponent(b, v))) << shift(v);
  return r;
}

}  // namespace pmono

ParamPoly::ParamPoly(long c) {
  if (c != 0) terms_.push_back({0, mpz_class(c)});
}

ParamPoly::ParamPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({0, c});
}

ParamPoly ParamPoly::variable(Param v, int e) { return monomial(pmono::make(v, e), 1); }

ParamPoly ParamPoly::monomial(uint64_t mono, mpz_class coef) {
  ParamPoly r;
  if (coef != 0) r.terms_.push_back({mono, std::move(coef)});
  return r;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  ParamPoly r;
  r.terms_ = std::move(terms);
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  r.combine_sorted();
  return r;
}

void ParamPoly::combine_sorted() {
  std::size_t w = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    mpz_class c = std::move(terms_[i].coef);
    while (j < terms_.size() && terms_[j].mono == terms_[i].mono) {
      c += terms_[j].coef;
      ++j;
    }
    if (c != 0) {
      terms_[w].mono = terms_[i].mono;
      terms_[w].coef = std::move(c);
      ++w;
    }
    i = j;
  }
  terms_.resize(w);
}

mpz_class ParamPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("constant_value of non-constant polynomial");
  return terms_[0].coef;
}

int ParamPoly::degree_in(int v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, pmono::exponent(t.mono, v));
  return d;
}

int ParamPoly::min_degree_in(int v) const {
  if (terms_.empty()) return 0;
  int d = pmono::kMaxExponent;
  for (const auto& t : terms_) d = std::min(d, pmono::exponent(t.mono, v));
  return d;
}

int ParamPoly::total_degree() const { return terms_.empty() ? 0 : pmono::degree(terms_[0].mono); }

ParamMask ParamPoly::support() const {
  ParamMask m = 0;
  for (const auto& t : terms_)
    for (int v = 0; v < kParamCount; ++v)
      if (pmono::exponent(t.mono, v) != 0) m |= 1u << v;
  return m;
}

mpz_class ParamPoly::max_norm() const {
  mpz_class n = 0;
  for (const auto& t : terms_)
    if (abs(t.coef) > n) n = abs(t.coef);
  return n;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {
template <bool Subtract>
std::vector<ParamPoly::Term> merge(const std::vector<ParamPoly::Term>& a,
                                   const std::vector<ParamPoly::Term>& b) {
  std::vector<ParamPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && pmono::greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || pmono::greater(b[j].mono, a[i].mono)) {
      out.push_back({b[j].mono, Subtract ? mpz_class(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      mpz_class c = Subtract ? mpz_class(a[i].coef - b[j].coef) : mpz_class(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

ParamPoly ParamPoly::mul_monomial(uint64_t mono, const mpz_class& c) const {
  ParamPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({pmono::mul(t.mono, mono), t.coef * c});
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return ParamPoly();
  if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coef);
  if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coef);
  std::vector<ParamPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({pmono::mul(x.mono, y.mono), x.coef * y.coef});
  return ParamPoly::from_terms(std::move(prod));
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<ParamPoly> ParamPoly::divide(const ParamPoly& f, const ParamPoly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.is_zero()) return ParamPoly();
  const Term& lg = g.terms_[0];
  if (g.terms_.size() == 1) {
    ParamPoly q;
    q.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_) {
      if (!pmono::divides(lg.mono, t.mono) || !mpz_divisible_p(t.coef.get_mpz_t(), lg.coef.get_mpz_t()))
        return std::nullopt;
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), t.coef.get_mpz_t(), lg.coef.get_mpz_t());
      q.terms_.push_back({pmono::quotient(t.mono, lg.mono), std::move(c)});
    }
    return q;
  }
  if (pmono::degree(f.terms_[0].mono) < pmono::degree(lg.mono)) return std::nullopt;
  std::vector<Term> rem = f.terms_;
  std::vector<Term> quot;
  std::vector<Term> scaled;
  while (!rem.empty()) {
    const Term& lr = rem[0];
    if (!pmono::divides(lg.mono, lr.mono) || !mpz_divisible_p(lr.coef.get_mpz_t(), lg.coef.get_mpz_t()))
      return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lr.coef.get_mpz_t(), lg.coef.get_mpz_t());
    uint64_t m = pmono::quotient(lr.mono, lg.mono);
    scaled.clear();
    scaled.reserve(g.terms_.size() - 1);
    for (std::size_t k = 1; k < g.terms_.size(); ++k)
      scaled.push_back({pmono::mul(g.terms_[k].mono, m), g.terms_[k].coef * c});
    quot.push_back({m, std::move(c)});
    rem.erase(rem.begin());
    rem = merge<true>(rem, scaled);
  }
  ParamPoly q;
  q.terms_ = std::move(quot);
  return q;
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& f, const ParamPoly& g) {
  auto q = divide(f, g);
  if (!q) throw InternalDivisionError("parameter polynomial division not exact");
  return std::move(*q);
}

ParamPoly ParamPoly::divide_integer(const mpz_class& c) const {
  if (c == 0) throw DivisionByZero("integer division by zero");
  ParamPoly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
  return r;
}

mpz_class ParamPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ParamPoly ParamPoly::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class c = content();
  return c == 1 ? *this : divide_integer(c);
}

ParamPoly ParamPoly::evaluate(int v, const mpz_class& x) const {
  const int dmax = degree_in(v);
  if (dmax == 0) return *this;
  std::vector<mpz_class> powers(dmax + 1);
  powers[0] = 1;
  for (int d = 1; d <= dmax; ++d) powers[d] = powers[d - 1] * x;
  std::vector<Term> out;
  out.reserve(terms_.size());
  const uint64_t field = pmono::kFieldMask << pmono::shift(v);
  for (const auto& t : terms_) {
    int e = pmono::exponent(t.mono, v);
    if (powers[e] == 0) continue;
    out.push_back({t.mono & ~field, t.coef * powers[e]});
  }
  return from_terms(std::move(out));
}

std::vector<ParamPoly> ParamPoly::to_univariate(int v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  const uint64_t field = pmono::kFieldMask << pmono::shift(v);
  for (const auto& t : terms_) buckets[pmono::exponent(t.mono, v)].push_back({t.mono & ~field, t.coef});
  std::vector<ParamPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    ParamPoly p;
    p.terms_ = std::move(b);
    std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
    out.push_back(std::move(p));
  }
  return out;
}

ParamPoly ParamPoly::from_univariate(const std::vector<ParamPoly>& coeffs, int v) {
  std::vector<Term> out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    uint64_t m = pmono::make(static_cast<Param>(v), static_cast<int>(d));
    for (const auto& t : coeffs[d].terms_) out.push_back({pmono::mul(t.mono, m), t.coef});
  }
  return from_terms(std::move(out));
}

std::string ParamPoly::serialize(ParamMask field) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += ' ';
    out += t.coef.get_str();
    out += '[';
    bool first = true;
    for (int v = 0; v < kParamCount; ++v) {
      int e = pmono::exponent(t.mono, v);
      if (!(field & (1u << v))) {
        if (e != 0) throw std::logic_error("serialize: parameter outside declared field");
        continue;
      }
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    out += ']';
  }
  return out;
}

ParamPoly ParamPoly::deserialize(const std::string& text, ParamMask field) {
  if (text == "0") return ParamPoly();
  std::vector<int> vars;
  for (int v = 0; v < kParamCount; ++v)
    if (field & (1u << v)) vars.push_back(v);
  std::vector<Term> terms;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto lb = tok.find('[');
    if (lb == std::string::npos || tok.back() != ']') throw ParseError("bad parameter term: " + tok);
    mpz_class c;
    if (c.set_str(tok.substr(0, lb), 10) != 0 || c == 0) throw ParseError("bad coefficient: " + tok);
    std::string inner = tok.substr(lb + 1, tok.size() - lb - 2);
    std::vector<int> exps;
    if (!inner.empty()) {
      std::stringstream es(inner);
      std::string e;
      while (std::getline(es, e, ',')) {
        if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("bad exponent in: " + tok);
        exps.push_back(std::stoi(e));
      }
    }
    if (exps.size() != vars.size()) throw ParseError("exponent vector length mismatch: " + tok);
    uint64_t m = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) m = pmono::mul(m, pmono::make(static_cast<Param>(vars[i]), exps[i]));
    terms.push_back({m, c});
  }
  ParamPoly r = from_terms(terms);
  if (r.size() != terms.size()) throw ParseError("repeated parameter monomial in: " + text);
  return r;
}

std::string ParamPoly::pretty() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coef;
    if (!first) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0 && t.mono != 0 && c == -1) {
      out += "-";
      c = 1;
    }
    std::string mono;
    for (int v = 0; v < kParamCount; ++v) {
      int e = pmono::exponent(t.mono, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kNames[v];
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
    first = false;
  }
  return out;
}

std::size_t ParamPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003u ^ std::hash<uint64_t>()(t.mono);
    h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(t.coef.get_mpz_t()));
  }
  return h;
}

}  // namespace jackclust
