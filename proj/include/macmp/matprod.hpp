#pragma once

// Matrix product evaluation of f_lambda, its normalization, lattice
// configurations, transition matrices, and symmetrization.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "macmp/compositions.hpp"
#include "macmp/lattice.hpp"
#include "macmp/xring.hpp"

namespace macmp {

/// prod_{1<=i<j<=r} 1 / (1 - q^(j-i) t^(lambda'_i - lambda'_j)).
QTRat omega_norm(const Composition& lambda, int r);

/// One term of the expanded matrix product.
struct Configuration {
  /// row_paths[i] = (nu_r, ..., nu_1, 0) for row i.
  std::vector<std::vector<int>> row_paths;
  Exponents monomial;
  /// (level, family) -> word including the trailing twist atom.
  std::map<std::pair<int, int>, OscWord> words;
  QTRat trace;
};

/// Nonzero-trace configurations; rank -1 means max part.
std::vector<Configuration> expand_configurations(const Composition& lambda, int r = -1);
std::string to_string(const Configuration& c);

/// The trace Tr[A_{lambda_1}(x_1) ... A_{lambda_n}(x_n) S] before normalization.
XPoly trace_sum(const Composition& lambda, int r = -1);
/// f_lambda: the trace divided by the normalization. Memoized.
XPoly compute_f(const Composition& lambda, int r = -1);

/// Tr[tildeL_{lambda_1,mu_1}(x_1) ... tildeL_{lambda_n,mu_n}(x_n) s] at rank r.
XPoly transition(const Composition& lambda, const Composition& mu, int r = -1);

/// prod_{i=1}^{r-1} (1 - q^i t^(m_1 + ... + m_i)).
QTRat recursion_prefactor(const Composition& lambda, int r);

struct RecursionReport {
  bool ok = false;
  int rank = 0;
  QTRat prefactor;
  /// Surviving mu with T_{lambda,mu} and f_mu.
  std::vector<std::pair<Composition, XPoly>> transitions;
  XPoly lhs, rhs;
};
RecursionReport check_recursion(const Composition& lambda);
bool verify_recursion(const Composition& lambda);

/// Symmetric Macdonald polynomial as the sum of f_mu over the orbit of lambda.
XPoly compute_P(const Composition& lambda);

struct GeneratingReport {
  bool ok = false;
  /// Keyed by the multiplicity vector (m_0, ..., m_r), i.e. the y-monomial.
  std::map<std::vector<int>, XPoly> lhs, rhs;
};
/// Compares Tr[S prod_i A(y; x_i)] with sum_lambda Omega_lambda y^m(lambda) P_lambda.
GeneratingReport generating_trace(int r, int n);

}  // namespace macmp
