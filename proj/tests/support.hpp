#pragma once

// Shared helpers for the unit tests: fixed-seed random inputs and a few
// shorthands for building field elements.

#include <random>

#include "macmp/oscillator.hpp"
#include "macmp/qtfield.hpp"
#include "macmp/xring.hpp"

namespace testsupport {

using namespace macmp;

inline std::mt19937& rng() {
  static std::mt19937 g(0x5eed1234u);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline QTRat q() { return QTRat::q(); }
inline QTRat t() { return QTRat::t(); }
inline QTRat one_minus(int qexp, int texp) { return QTRat(1) - QTRat::monomial(qexp, texp); }

inline QTPoly random_qtpoly(int max_terms, int max_deg, int max_coef) {
  QTPoly p;
  const int k = uniform(1, max_terms);
  for (int i = 0; i < k; ++i) {
    int c = uniform(-max_coef, max_coef);
    p += qt::mono(uniform(0, max_deg), uniform(0, max_deg), c);
  }
  return p;
}

inline QTRat random_qtrat() {
  QTPoly den;
  while (den.is_zero()) den = random_qtpoly(3, 2, 3);
  return QTRat(random_qtpoly(3, 2, 4), den);
}

inline QTRat random_nonzero_qtrat() {
  QTRat r;
  while (r.is_zero()) r = random_qtrat();
  return r;
}

/// Random polynomial in n variables with small integer or simple rational coefficients.
inline XPoly random_xpoly(int n, int max_terms, int max_deg) {
  XPoly f(n);
  const int k = uniform(1, max_terms);
  for (int i = 0; i < k; ++i) {
    Exponents e(n);
    for (auto& v : e) v = uniform(0, max_deg);
    QTRat c = uniform(0, 2) == 0 ? QTRat(uniform(1, 3)) / one_minus(uniform(0, 1), uniform(1, 2))
                                 : QTRat(uniform(-3, 3));
    f.add_term(e, c);
  }
  return f;
}

}  // namespace testsupport
