#include "macmp/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "macmp/hecke.hpp"
#include "macmp/linalg.hpp"

namespace macmp {

namespace {

std::vector<Exponents> monomials_of_degree(int n, int d) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n - 1) {
      e[k] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[k] = v;
      self(self, k + 1, left - v);
    }
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

XPoly solve_eigen_system(const Composition& lambda, const std::vector<Exponents>& basis) {
  const int n = static_cast<int>(lambda.size());
  std::map<Exponents, int> index;
  for (const auto& e : basis) index.emplace(e, static_cast<int>(index.size()));
  const int lead = index.at(lambda);
  // Unknown k corresponds to basis monomial k, except that the leading
  // coefficient is fixed to 1 and moved to the right-hand side.
  auto unknown = [lead](int k) { return k < lead ? k : k - 1; };
  const int m = static_cast<int>(basis.size()) - 1;
  std::vector<SparseRow<QTRat>> rows;
  for (int i = 1; i <= n; ++i) {
    QTRat ev = murphy_eigenvalue(lambda, i);
    std::map<Exponents, SparseRow<QTRat>> eqs;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      XPoly img = murphy_apply(i, XPoly::monomial(basis[k])) - XPoly::monomial(basis[k], ev);
      for (const auto& [e, c] : img.terms()) {
        auto& row = eqs[e];
        if (static_cast<int>(k) == lead)
          row.rhs -= c;
        else
          row.coef[unknown(static_cast<int>(k))] += c;
      }
    }
    for (auto& [e, row] : eqs) {
      for (auto it = row.coef.begin(); it != row.coef.end();)
        it = it->second.is_zero() ? row.coef.erase(it) : std::next(it);
      if (!row.coef.empty() || !row.rhs.is_zero()) rows.push_back(std::move(row));
    }
  }
  std::vector<QTRat> sol = solve_linear(std::move(rows), m);
  XPoly E(n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    int kk = static_cast<int>(k);
    E.add_term(basis[k], kk == lead ? QTRat(1) : sol[unknown(kk)]);
  }
  return E;
}

}  // namespace

XPoly eigen_solve_E(const Composition& lambda) {
  const int n = static_cast<int>(lambda.size());
  const int d = weight(lambda);
  const Composition top = sort_dominant(lambda);
  std::vector<Exponents> basis;
  for (const auto& e : monomials_of_degree(n, d))
    if (dominance_leq(sort_dominant(e), top)) basis.push_back(e);
  try {
    return solve_eigen_system(lambda, basis);
  } catch (const NoSolution&) {
    return solve_eigen_system(lambda, monomials_of_degree(n, d));
  }
}

XPoly schur(const Composition& lambda, int n) {
  std::vector<int> shape;
  for (int p : lambda)
    if (p > 0) shape.push_back(p);
  XPoly s(n);
  if (static_cast<int>(shape.size()) > n) return s;
  std::vector<std::vector<int>> T;
  for (int len : shape) T.emplace_back(len, 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  Exponents content(n, 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      s.add_term(content, QTRat(1));
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, T[r][c - 1]);
    if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      T[r][c] = v;
      ++content[v - 1];
      self(self, k + 1);
      --content[v - 1];
    }
  };
  rec(rec, 0);
  return s;
}

namespace {

/// Exact quotient f / (x_i - x_j), 0-based distinct indices.
XPoly divide_by_difference(const XPoly& f, int i, int j) {
  auto by_xi = [i](const Exponents& l, const Exponents& r) {
    if (l[i] != r[i]) return l[i] > r[i];
    return l < r;
  };
  std::map<Exponents, QTRat, decltype(by_xi)> rem(by_xi);
  for (const auto& [e, c] : f.terms()) rem.emplace(e, c);
  XPoly quot(f.nvars());
  while (!rem.empty()) {
    auto it = rem.begin();
    Exponents e = it->first;
    QTRat c = it->second;
    rem.erase(it);
    if (e[i] == 0) throw InternalNonDivisibility("symmetrized numerator is not divisible by the Vandermonde");
    --e[i];
    quot.add_term(e, c);
    ++e[j];
    auto [jt, inserted] = rem.try_emplace(e, c);
    if (!inserted) {
      jt->second += c;
      if (jt->second.is_zero()) rem.erase(jt);
    }
  }
  return quot;
}

XPoly permute(const XPoly& f, const std::vector<int>& w) {
  XPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponents s(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) s[w[k]] = e[k];
    r.add_term(s, c);
  }
  return r;
}

int sign_of(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

Rational ipow(const Rational& b, int e) {
  Rational r = 1;
  Rational base = e < 0 ? Rational(1) / b : b;
  for (int k = 0; k < std::abs(e); ++k) r *= base;
  return r;
}

}  // namespace

XPoly hall_littlewood(const Composition& lambda, int n) {
  Composition lam = lambda;
  if (static_cast<int>(lam.size()) > n) {
    if (std::any_of(lam.begin() + n, lam.end(), [](int p) { return p != 0; })) return XPoly(n);
    lam.resize(n);
  }
  lam.resize(n, 0);
  XPoly g = XPoly::monomial(lam);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g = g * (XPoly::var(n, i + 1) - XPoly::var(n, j + 1) * QTRat::t());
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  XPoly alt(n);
  do alt += permute(g, w) * QTRat(sign_of(w));
  while (std::next_permutation(w.begin(), w.end()));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) alt = divide_by_difference(alt, i, j);
  QTRat v(1);
  for (int m : multiplicities(lam))
    for (int j = 1; j <= m; ++j) v *= bracket(j);
  return alt / v;
}

AsepStationary asep_stationary(const Composition& species, const Rational& t, HopConvention conv) {
  AsepStationary out;
  out.states = orbit(species);
  const int N = static_cast<int>(out.states.size());
  const int n = static_cast<int>(species.size());
  std::map<Composition, int> index;
  for (int k = 0; k < N; ++k) index.emplace(out.states[k], k);
  // Generator Q with Q[new][old] = rate; the stationary law solves Q p = 0.
  std::vector<std::map<int, Rational>> Q(N);
  auto add_rate = [&](int from, int to, const Rational& rate) {
    Q[to][from] += rate;
    Q[from][from] -= rate;
  };
  for (int k = 0; k < N; ++k) {
    const Composition& s = out.states[k];
    for (int site = 0; site < n; ++site) {
      int nxt = (site + 1) % n;
      int a = s[site], b = s[nxt];
      if (a == b) continue;
      Composition sw = s;
      std::swap(sw[site], sw[nxt]);
      bool forward = conv == HopConvention::LargerHopsRight ? a > b : a < b;
      add_rate(k, index.at(sw), forward ? Rational(1) : t);
    }
  }
  std::vector<SparseRow<Rational>> rows;
  for (int r = 0; r < N; ++r) {
    SparseRow<Rational> row;
    for (const auto& [c, v] : Q[r])
      if (v != 0) row.coef.emplace(c, v);
    rows.push_back(std::move(row));
  }
  SparseRow<Rational> norm;
  for (int c = 0; c < N; ++c) norm.coef.emplace(c, Rational(1));
  norm.rhs = 1;
  rows.push_back(std::move(norm));
  try {
    out.probability = solve_linear(std::move(rows), N);
  } catch (const NonUnique&) {
    throw ReducibleChain("stationary law is not unique for (" + composition_string(species) + ")");
  }
  return out;
}

Rational numeric_trace(const OscWord& w, const Rational& t, const Rational& q, int M) {
  Rational total = 0;
  for (int m = 0; m <= M; ++m) {
    int occ = m;
    Rational amp = 1;
    for (auto it = w.rbegin(); it != w.rend() && amp != 0; ++it) {
      switch (it->kind) {
        case OscAtom::Kind::Raise:
          ++occ;
          break;
        case OscAtom::Kind::Lower:
          if (occ == 0) {
            amp = 0;
            break;
          }
          amp *= 1 - ipow(t, occ);
          --occ;
          break;
        case OscAtom::Kind::KPow:
          amp *= ipow(t, it->t_exp * occ) * ipow(q, it->q_exp * occ);
          break;
      }
    }
    if (occ == m) total += amp;
  }
  return total;
}

}  // namespace macmp
