#pragma once

// Murphy operators in the rescaled normalization, the qKZ relations, and
// construction of non-symmetric Macdonald polynomials by Baxterised raising.

#include <map>
#include <string>
#include <vector>

#include "macmp/compositions.hpp"
#include "macmp/xring.hpp"

namespace macmp {

/// Y_i = T_i ... T_{n-1} omega T_1^{-1} ... T_{i-1}^{-1}, 1 <= i <= n.
XPoly murphy_apply(int i, const XPoly& f);
/// t^(n+1-i-w_plus_inv(i)) q^(lambda_i).
QTRat murphy_eigenvalue(const Composition& lambda, int i);
bool eigen_check(const Composition& lambda, const XPoly& f);

/// T_i f + (1 - t)/(1 - X) f for a formal spectral monomial X.
XPoly baxterised(const XPoly& f, int i, const QTRat& X);

struct QkzReport {
  bool ok = true;
  long checks = 0;
  std::vector<std::string> failures;
};
QkzReport check_qkz(const Composition& lambda_plus);
bool verify_qkz(const Composition& lambda_plus);

/// E_{s_i lambda} from E_lambda; requires lambda_i < lambda_{i+1}.
XPoly raise_E(const Composition& lambda, int i, const XPoly& E);
/// Non-symmetric Macdonald polynomial E_lambda, from f of the anti-dominant weight. Memoized.
XPoly compute_E(const Composition& lambda);
/// Coefficients c with E_lambda = sum_mu c_mu f_mu over the orbit of lambda; zero entries omitted.
std::map<Composition, QTRat> triangular_expand(const Composition& lambda);

}  // namespace macmp
