#include "jackclust/partlib/eigenvalues.hpp"

namespace jackclust {

namespace {

const ParamMask kAlphaField = mask_of(Param::alpha);
const ParamMask kQTField = mask_of(Param::q) | mask_of(Param::t);

ParamPoly qt_monomial(int qe, int te) {
  return ParamPoly::monomial(pmono::mul(pmono::make(Param::q, qe), pmono::make(Param::t, te)), 1);
}

}  // namespace

FieldElement eigen_jack_sym(const Partition& kappa) {
  const long n = kappa.size();
  long quad = 0, weighted = 0, mod = kappa.modulus();
  for (int j = 0; j < n; ++j) {
    quad += static_cast<long>(kappa[j]) * (kappa[j] - 1);
    weighted += static_cast<long>(j) * kappa[j];
  }
  ParamPoly a = ParamPoly::variable(Param::alpha);
  ParamPoly e = ParamPoly(quad) + (a * ParamPoly(n - 1) + ParamPoly(1)) * ParamPoly(mod) - a * ParamPoly(2 * weighted);
  return FieldElement::from_poly(e, kAlphaField);
}

ParamPoly sutherland_eigenvalue(const Partition& kappa) {
  const long n = kappa.size();
  long quad = 0, lin = 0;
  for (int j = 0; j < n; ++j) {
    quad += static_cast<long>(kappa[j]) * kappa[j];
    lin += (n - 1 - 2L * j) * kappa[j];
  }
  return ParamPoly::variable(Param::alpha) * ParamPoly(quad) + ParamPoly(lin);
}

ParamPoly eigen_jack_nonsym_poly(const Composition& eta, int i) {
  long count = 0;
  for (int k = 0; k < static_cast<int>(eta.size()); ++k) {
    if (k < i && eta[k] >= eta[i]) ++count;
    if (k > i && eta[k] > eta[i]) ++count;
  }
  return ParamPoly::variable(Param::alpha) * ParamPoly(static_cast<long>(eta[i])) - ParamPoly(count);
}

FieldElement eigen_jack_nonsym(const Composition& eta, int i) {
  return FieldElement::from_poly(eigen_jack_nonsym_poly(eta, i), kAlphaField);
}

ParamPoly eigen_macdonald_sym_poly(const Partition& kappa) {
  ParamPoly e;
  const int n = kappa.size();
  for (int i = 0; i < n; ++i) e += qt_monomial(kappa[i], n - 1 - i);
  return e;
}

FieldElement eigen_macdonald_sym(const Partition& kappa) {
  return FieldElement::from_poly(eigen_macdonald_sym_poly(kappa), kQTField);
}

int l_prime(const Composition& eta, int i) {
  int count = 0;
  for (int j = 0; j < static_cast<int>(eta.size()); ++j) {
    if (j < i && eta[j] >= eta[i]) ++count;
    if (j > i && eta[j] > eta[i]) ++count;
  }
  return count;
}

int l_prime_minus(const Composition& eta, int i) {
  int count = 0;
  for (int j = 0; j < static_cast<int>(eta.size()); ++j) {
    if (j < i && eta[j] >= eta[i]) ++count;
    if (j > i && eta[j] > eta[i]) --count;
  }
  return count;
}

FieldElement eigen_macdonald_nonsym(const Composition& eta, int i) {
  FieldElement q = FieldElement::indeterminate(Param::q, kQTField);
  FieldElement t = FieldElement::indeterminate(Param::t, kQTField);
  return q.pow(eta[i]) * t.pow(-l_prime(eta, i));
}

ParamPoly eigen_macdonald_nonsym_scaled(const Composition& eta, int i) {
  return qt_monomial(eta[i], static_cast<int>(eta.size()) - 1 - l_prime(eta, i));
}

}  // namespace jackclust
