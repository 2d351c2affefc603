#include "macmp/hecke.hpp"

#include <mutex>

#include "macmp/linalg.hpp"
#include "macmp/matprod.hpp"

namespace macmp {

XPoly murphy_apply(int i, const XPoly& f) {
  const int n = f.nvars();
  if (i < 1 || i > n) throw IndexOutOfRange("Murphy index " + std::to_string(i) + " for n = " + std::to_string(n));
  XPoly g = f;
  for (int k = i - 1; k >= 1; --k) g = demazure_T_inv(g, k);
  g = shift_omega(g);
  for (int k = n - 1; k >= i; --k) g = demazure_T(g, k);
  return g;
}

QTRat murphy_eigenvalue(const Composition& lambda, int i) {
  auto [texp, qexp] = spectral_data(lambda).eigen_exponents.at(i - 1);
  return QTRat::monomial(qexp, texp);
}

bool eigen_check(const Composition& lambda, const XPoly& f) {
  const int n = static_cast<int>(lambda.size());
  if (f.nvars() != n) throw LengthMismatch("composition and polynomial have different lengths");
  if (f.is_zero()) return false;
  for (int i = 1; i <= n; ++i)
    if (!(murphy_apply(i, f) == f * murphy_eigenvalue(lambda, i))) return false;
  return true;
}

XPoly baxterised(const XPoly& f, int i, const QTRat& X) {
  return demazure_T(f, i) + f * ((QTRat(1) - QTRat::t()) / (QTRat(1) - X));
}

QkzReport check_qkz(const Composition& lambda_plus) {
  if (!is_partition(lambda_plus))
    throw NotAPartition("(" + composition_string(lambda_plus) + ") is not weakly decreasing");
  QkzReport rep;
  const int n = static_cast<int>(lambda_plus.size());
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.failures.push_back(what);
  };
  for (const auto& mu : orbit(lambda_plus)) {
    XPoly f = compute_f(mu);
    for (int i = 1; i < n; ++i) {
      if (mu[i - 1] == mu[i]) {
        ++rep.checks;
        if (!(demazure_T(f, i) == f * QTRat::t()))
          fail("T_" + std::to_string(i) + " f(" + composition_string(mu) + ") != t f");
      } else if (mu[i - 1] > mu[i]) {
        ++rep.checks;
        Composition s = mu;
        std::swap(s[i - 1], s[i]);
        if (!(demazure_T(f, i) == compute_f(s)))
          fail("T_" + std::to_string(i) + " f(" + composition_string(mu) + ") != f(" + composition_string(s) + ")");
      }
    }
    ++rep.checks;
    Composition rot(n);
    rot[0] = mu[n - 1];
    for (int k = 1; k < n; ++k) rot[k] = mu[k - 1];
    if (!(shift_omega(compute_f(rot)) == f * QTRat::monomial(mu[n - 1], 0)))
      fail("omega f(" + composition_string(rot) + ") != q^" + std::to_string(mu[n - 1]) + " f(" +
           composition_string(mu) + ")");
  }
  return rep;
}

bool verify_qkz(const Composition& lambda_plus) { return check_qkz(lambda_plus).ok; }

XPoly raise_E(const Composition& lambda, int i, const XPoly& E) {
  const int n = static_cast<int>(lambda.size());
  if (i < 1 || i >= n) throw IndexOutOfRange("raising index " + std::to_string(i));
  if (lambda[i - 1] >= lambda[i])
    throw NotRaisable("(" + composition_string(lambda) + ") has no ascent at position " + std::to_string(i));
  Composition target = lambda;
  std::swap(target[i - 1], target[i]);
  auto two_rho = rho_of(lambda);
  // Spectral ratio y_{i+1}/y_i; its exponents are integers.
  const int texp = (two_rho[i] - two_rho[i - 1]) / 2;
  const int qexp = lambda[i] - lambda[i - 1];
  const QTRat d = QTRat::monomial(qexp, texp);
  for (const QTRat& X : {d, QTRat(1) / d}) {
    XPoly g = baxterised(E, i, X);
    QTRat lead = g.coeff(target);
    if (lead.is_zero()) continue;
    g /= lead;
    if (eigen_check(target, g)) return g;
  }
  throw BranchResolutionFailure("no spectral branch yields an eigenfunction for (" + composition_string(target) + ")");
}

XPoly compute_E(const Composition& lambda) {
  static std::mutex mu;
  static std::map<Composition, XPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  // Bubble-sort lambda down to the anti-dominant weight, recording the swaps.
  Composition cur = lambda;
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k)
      if (cur[k] > cur[k + 1]) {
        std::swap(cur[k], cur[k + 1]);
        swaps.push_back(static_cast<int>(k) + 1);
        moved = true;
      }
  }
  XPoly E = compute_f(cur);
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    E = raise_E(cur, *it, E);
    std::swap(cur[*it - 1], cur[*it]);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(lambda, E);
  return E;
}

std::map<Composition, QTRat> triangular_expand(const Composition& lambda) {
  XPoly E = compute_E(lambda);
  auto basis = orbit(lambda);
  std::vector<XPoly> fs;
  for (const auto& mu : basis) fs.push_back(compute_f(mu));
  std::map<Exponents, int> row_of;
  std::vector<SparseRow<QTRat>> rows;
  auto row_for = [&](const Exponents& e) -> SparseRow<QTRat>& {
    auto [it, inserted] = row_of.try_emplace(e, static_cast<int>(rows.size()));
    if (inserted) rows.push_back({{}, E.coeff(e)});
    return rows[it->second];
  };
  for (const auto& [e, c] : E.terms()) row_for(e);
  for (std::size_t k = 0; k < fs.size(); ++k)
    for (const auto& [e, c] : fs[k].terms()) row_for(e).coef.emplace(static_cast<int>(k), c);
  std::vector<QTRat> sol;
  try {
    sol = solve_linear(std::move(rows), static_cast<int>(basis.size()));
  } catch (const Error& e) {
    throw SingularSystem(std::string("triangular expansion: ") + e.what());
  }
  std::map<Composition, QTRat> out;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!sol[k].is_zero()) out.emplace(basis[k], sol[k]);
  return out;
}

}  // namespace macmp
