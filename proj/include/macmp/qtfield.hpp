#pragma once

// Exact arithmetic in Q(q, t): reduced quotients of integer polynomials in
// the two formal parameters. Every exponent of the form a + b*u that shows
// up in the theory (with q = t^u) is realized as the monomial q^b t^a.

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "macmp/errors.hpp"
#include "macmp/sparse_poly.hpp"

namespace macmp {

/// Integer polynomial in q, t. Exponent index 0 is q, index 1 is t.
using QTPoly = SparsePoly<2>;

namespace qt {
inline QTPoly mono(int qexp, int texp, const BigInt& c = 1) { return QTPoly::monomial({qexp, texp}, c); }
inline QTPoly one() { return QTPoly(1); }
/// 1 - q^qexp t^texp
inline QTPoly one_minus(int qexp, int texp) { return one() - mono(qexp, texp); }
}  // namespace qt

/// Canonical gcd in Z[q,t]: the lexicographically lowest term is positive.
QTPoly gcd(const QTPoly& a, const QTPoly& b);

class QTRat {
 public:
  QTRat() : num_(), den_(1) {}
  QTRat(long c) : num_(c), den_(1) {}  // NOLINT: implicit integer embedding
  QTRat(const BigInt& c) : num_(c), den_(1) {}  // NOLINT
  explicit QTRat(QTPoly num) : num_(std::move(num)), den_(1) {}
  /// Reduces num/den; throws DivisionByZero when den is zero.
  QTRat(QTPoly num, QTPoly den);

  static QTRat q() { return QTRat(qt::mono(1, 0)); }
  static QTRat t() { return QTRat(qt::mono(0, 1)); }
  /// q^qexp t^texp for any integer exponents.
  static QTRat monomial(int qexp, int texp, const BigInt& c = 1);

  const QTPoly& num() const { return num_; }
  const QTPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// True when both numerator and denominator are constants.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  QTRat operator-() const;
  QTRat& operator+=(const QTRat& o);
  QTRat& operator-=(const QTRat& o);
  QTRat& operator*=(const QTRat& o);
  QTRat& operator/=(const QTRat& o);

  friend QTRat operator+(QTRat a, const QTRat& b) { return a += b; }
  friend QTRat operator-(QTRat a, const QTRat& b) { return a -= b; }
  friend QTRat operator*(QTRat a, const QTRat& b) { return a *= b; }
  friend QTRat operator/(QTRat a, const QTRat& b) { return a /= b; }

  bool operator==(const QTRat& o) const { return num_ == o.num_ && den_ == o.den_; }

  QTRat pow(int e) const;

 private:
  QTPoly num_;
  QTPoly den_;

  struct Reduced {};
  QTRat(QTPoly num, QTPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void fix_sign();
};

enum class ArithOp { Add, Sub, Mul, Div };
QTRat arith(const QTRat& a, const QTRat& b, ArithOp op);

/// [m] = (1 - t^m) / (1 - t).
QTRat bracket(int m);
/// [m + c u] = (1 - q^c t^m) / (1 - t).
QTRat bracket_shifted(int m, int c);

/// Substitution rule for specialize(). Each parameter is either kept formal
/// or replaced; q may additionally be replaced by t.
struct Specialization {
  enum class QRule { Keep, Zero, EqualsT, One, Value };
  QRule q_rule = QRule::Keep;
  Rational q_value = 0;
  std::optional<Rational> t_value;

  static Specialization q_zero() { return {QRule::Zero, 0, std::nullopt}; }
  static Specialization q_equals_t() { return {QRule::EqualsT, 0, std::nullopt}; }
  static Specialization q_one() { return {QRule::One, 0, std::nullopt}; }
  static Specialization numeric(const Rational& q, const Rational& t) { return {QRule::Value, q, t}; }

  /// Parses "q=0", "q=t", "q=1", "q=NUM,t=NUM", "t=NUM".
  static Specialization parse(const std::string& text);
};

/// Exact substitution; throws SpecializationPole when the denominator
/// vanishes identically under the rule.
QTRat specialize(const QTRat& a, const Specialization& rule);

/// Numeric value of a constant QTRat; throws UsageError when non-constant.
Rational to_rational(const QTRat& a);
QTRat from_rational(const Rational& r);

std::string to_string(const QTPoly& p);
std::string to_string(const QTRat& a);
std::string to_latex(const QTRat& a);
std::ostream& operator<<(std::ostream& os, const QTRat& a);

nlohmann::ordered_json to_json(const QTRat& a);
QTRat qtrat_from_json(const nlohmann::ordered_json& j);

}  // namespace macmp
