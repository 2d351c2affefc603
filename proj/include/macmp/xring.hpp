#pragma once

// Polynomials in x_1..x_n over Q(q,t) and the operators acting on them:
// transpositions s_i, the rescaled Demazure-Lusztig operators, and the
// affine shift.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "macmp/qtfield.hpp"

namespace macmp {

using Exponents = std::vector<int>;

class XPoly {
 public:
  explicit XPoly(int n = 0) : n_(n) {}

  static XPoly constant(int n, const QTRat& c);
  static XPoly monomial(const Exponents& e, const QTRat& c = QTRat(1));
  /// The variable x_i, 1-based.
  static XPoly var(int n, int i);

  int nvars() const { return n_; }
  const std::map<Exponents, QTRat>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const QTRat& c);
  QTRat coeff(const Exponents& e) const;

  /// Total degree of the highest term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const QTRat& c);
  XPoly& operator/=(const QTRat& c);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(XPoly a, const QTRat& c) { return a *= c; }
  friend XPoly operator*(const QTRat& c, XPoly a) { return a *= c; }
  friend XPoly operator/(XPoly a, const QTRat& c) { return a /= c; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);

  XPoly times_monomial(const Exponents& e, const QTRat& c = QTRat(1)) const;

  bool operator==(const XPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  int n_;
  std::map<Exponents, QTRat> terms_;
  void check_length(const Exponents& e) const;
};

/// Swaps x_i and x_{i+1}; 1 <= i <= n-1.
XPoly apply_s(const XPoly& f, int i);
/// (f - s_i f) / (x_i - x_{i+1}) by exact division.
XPoly divided_difference(const XPoly& f, int i);
/// T_i f = t f - (t x_i - x_{i+1}) (f - s_i f)/(x_i - x_{i+1}).
XPoly demazure_T(const XPoly& f, int i);
/// Inverse of demazure_T: (T_i - (t - 1)) / t.
XPoly demazure_T_inv(const XPoly& f, int i);
/// (omega f)(x_1..x_n) = f(q x_n, x_1, ..., x_{n-1}).
XPoly shift_omega(const XPoly& f);

QTRat coeff_of(const XPoly& f, const Exponents& mu);
bool is_symmetric(const XPoly& f);

/// Sum of all coefficients, i.e. f(1, ..., 1).
QTRat eval_at_ones(const XPoly& f);
XPoly specialize(const XPoly& f, const Specialization& rule);

/// Graded lexicographic order, highest first.
std::vector<std::pair<Exponents, QTRat>> graded_terms(const XPoly& f);
std::string monomial_string(const Exponents& e);
std::string to_string(const XPoly& f);
std::string to_latex(const XPoly& f);
std::ostream& operator<<(std::ostream& os, const XPoly& f);

nlohmann::ordered_json to_json(const XPoly& f);
XPoly xpoly_from_json(const nlohmann::ordered_json& j);

}  // namespace macmp
