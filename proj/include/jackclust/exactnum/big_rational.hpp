#pragma once

#include <gmpxx.h>

#include <string>

namespace jackclust {

// Thin value wrapper over mpq_class that keeps the canonical form invariant.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const mpz_class& v) : q_(v) {}  // NOLINT
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(const mpq_class& v) : q_(v) { q_.canonicalize(); }

  static BigRational parse(const std::string& text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  BigRational operator-() const { return BigRational(mpq_class(-q_)); }
  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }

  BigRational pow(int e) const;
  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

}  // namespace jackclust
