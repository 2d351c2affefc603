#pragma once

// Independent reference computations used to validate the matrix product
// pipeline.

#include <vector>

#include "macmp/compositions.hpp"
#include "macmp/oscillator.hpp"
#include "macmp/xring.hpp"

namespace macmp {

/// E_lambda as the solution of the joint Murphy eigen-equations, monic on x^lambda.
XPoly eigen_solve_E(const Composition& lambda);

/// Schur polynomial in n variables by semistandard tableaux.
XPoly schur(const Composition& lambda, int n);
/// Hall-Littlewood P in n variables by symmetrization over S_n.
XPoly hall_littlewood(const Composition& lambda, int n);

enum class HopConvention {
  /// (i, j) -> (j, i) at rate 1 when i > j on adjacent sites, reverse at rate t.
  LargerHopsRight,
  /// The mirror image: (j, i) -> (i, j) at rate 1 when i > j, reverse at rate t.
  LargerHopsLeft,
};

struct AsepStationary {
  std::vector<Composition> states;
  std::vector<Rational> probability;
};
/// Exact stationary law of the multispecies exclusion process on a ring.
AsepStationary asep_stationary(const Composition& species, const Rational& t, HopConvention conv);

/// sum_{m=0}^{M} <m|w|m> with numeric t, q.
Rational numeric_trace(const OscWord& w, const Rational& t, const Rational& q, int M);

}  // namespace macmp
