#pragma once

// Sparse Gauss-Jordan elimination over an exact field.

#include <map>
#include <optional>
#include <vector>

#include "macmp/errors.hpp"
#include "macmp/qtfield.hpp"

namespace macmp {

inline bool field_is_zero(const QTRat& x) { return x.is_zero(); }
inline bool field_is_zero(const Rational& x) { return x == 0; }

template <class F>
struct SparseRow {
  std::map<int, F> coef;
  F rhs{};
};

/// Solves the system for unknowns 0..n-1. Throws NoSolution when inconsistent
/// and NonUnique when some unknown is free.
template <class F>
std::vector<F> solve_linear(std::vector<SparseRow<F>> rows, int n) {
  std::vector<int> pivot_row(n, -1);
  std::vector<bool> used(rows.size(), false);
  for (int col = 0; col < n; ++col) {
    int best = -1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      auto it = rows[r].coef.find(col);
      if (it == rows[r].coef.end()) continue;
      if (best < 0 || rows[r].coef.size() < rows[best].coef.size()) best = static_cast<int>(r);
    }
    if (best < 0) continue;
    used[best] = true;
    pivot_row[col] = best;
    SparseRow<F>& p = rows[best];
    F inv = F(1) / p.coef.at(col);
    for (auto& [c, v] : p.coef) v *= inv;
    p.rhs *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == best) continue;
      auto it = rows[r].coef.find(col);
      if (it == rows[r].coef.end()) continue;
      F factor = it->second;
      for (const auto& [c, v] : p.coef) {
        auto jt = rows[r].coef.find(c);
        if (jt == rows[r].coef.end()) {
          rows[r].coef.emplace(c, F(0) - factor * v);
        } else {
          jt->second -= factor * v;
          if (field_is_zero(jt->second)) rows[r].coef.erase(jt);
        }
      }
      rows[r].rhs -= factor * p.rhs;
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!used[r] && rows[r].coef.empty() && !field_is_zero(rows[r].rhs))
      throw NoSolution("inconsistent linear system");
  for (int col = 0; col < n; ++col)
    if (pivot_row[col] < 0) throw NonUnique("unknown " + std::to_string(col) + " is undetermined");
  std::vector<F> x(n);
  for (int col = 0; col < n; ++col) x[col] = rows[pivot_row[col]].rhs;
  return x;
}

}  // namespace macmp
