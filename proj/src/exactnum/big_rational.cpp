#include "jackclust/exactnum/big_rational.hpp"

#include "jackclust/errors.hpp"

namespace jackclust {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
  mpq_class v;
  if (text.empty() || v.set_str(text, 10) != 0) throw ParseError("bad rational: '" + text + "'");
  if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + text);
  v.canonicalize();
  return BigRational(v);
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational BigRational::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw DivisionByZero("negative power of zero");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(-e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(-e));
    return BigRational(n, d);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return BigRational(n, d);
}

}  // namespace jackclust
