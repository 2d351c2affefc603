#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients. Terms are kept sorted ascending in lexicographic exponent
// order with no zero coefficients, so structural equality is value equality.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace macmp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <std::size_t N>
class SparsePoly {
 public:
  using Exponent = std::array<int, N>;
  struct Term {
    Exponent exp;
    BigInt coef;
    bool operator==(const Term&) const = default;
  };

  SparsePoly() = default;
  explicit SparsePoly(const BigInt& c) {
    if (c != 0) terms_.push_back({Exponent{}, c});
  }
  explicit SparsePoly(long c) : SparsePoly(BigInt(c)) {}

  static SparsePoly monomial(const Exponent& e, const BigInt& c = 1) {
    SparsePoly p;
    if (c != 0) p.terms_.push_back({e, c});
    return p;
  }

  /// Builds a polynomial from unsorted terms, combining duplicates.
  static SparsePoly from_terms(std::vector<Term> terms) {
    SparsePoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
  }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].exp == Exponent{} && terms_[0].coef == 1;
  }
  const Term& leading() const { return terms_.back(); }

  BigInt constant_coefficient() const {
    if (!terms_.empty() && terms_[0].exp == Exponent{}) return terms_[0].coef;
    return 0;
  }

  BigInt coefficient(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.exp < x; });
    if (it != terms_.end() && it->exp == e) return it->coef;
    return 0;
  }

  int max_degree(std::size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.exp[var] > d) d = t.exp[var];
      first = false;
    }
    return d;
  }
  int min_degree(std::size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.exp[var] < d) d = t.exp[var];
      first = false;
    }
    return d;
  }

  /// Integer content (non-negative gcd of coefficients).
  BigInt content() const {
    BigInt g = 0;
    for (const auto& t : terms_) {
      g = boost::multiprecision::gcd(g, t.coef);
      if (g == 1) break;
    }
    return g;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    terms_ = merge(terms_, o.terms_, false);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    terms_ = merge(terms_, o.terms_, true);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) return a.times_monomial(b.terms_[0].exp, b.terms_[0].coef);
    if (a.is_monomial()) return b.times_monomial(a.terms_[0].exp, a.terms_[0].coef);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back({add_exp(x.exp, y.exp), x.coef * y.coef});
    return from_terms(std::move(out));
  }

  SparsePoly times_monomial(const Exponent& e, const BigInt& c) const {
    SparsePoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({add_exp(t.exp, e), t.coef * c});
    return r;  // shifting preserves lexicographic order
  }
  SparsePoly times_scalar(const BigInt& c) const { return times_monomial(Exponent{}, c); }

  /// Exact division of every coefficient by c; c must divide the content.
  SparsePoly divide_scalar(const BigInt& c) const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.coef /= c;
    return r;
  }

  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

  static Exponent add_exp(const Exponent& a, const Exponent& b) {
    Exponent r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
  }

 private:
  std::vector<Term> terms_;

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coef += t.coef;
      } else {
        if (!out.empty() && out.back().coef == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    terms_ = std::move(out);
  }

  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                 bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].exp < a[i].exp) {
        out.push_back({b[j].exp, subtract ? BigInt(-b[j].coef) : b[j].coef});
        ++j;
      } else {
        BigInt c = subtract ? BigInt(a[i].coef - b[j].coef) : BigInt(a[i].coef + b[j].coef);
        if (c != 0) out.push_back({a[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }
};

/// Exact division a / b in the polynomial ring. Returns nullopt when b does
/// not divide a.
template <std::size_t N>
std::optional<SparsePoly<N>> divide_exact(const SparsePoly<N>& a, const SparsePoly<N>& b) {
  using P = SparsePoly<N>;
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return P{};
  const auto& lb = b.leading();
  if (b.is_monomial()) {
    std::vector<typename P::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      typename P::Exponent e;
      for (std::size_t i = 0; i < N; ++i) {
        e[i] = t.exp[i] - lb.exp[i];
        if (e[i] < 0) return std::nullopt;
      }
      BigInt qc, rc;
      boost::multiprecision::divide_qr(t.coef, lb.coef, qc, rc);
      if (rc != 0) return std::nullopt;
      out.push_back({e, qc});
    }
    return P::from_terms(std::move(out));
  }
  P rem = a;
  std::vector<typename P::Term> quot;
  while (!rem.is_zero()) {
    const auto& lr = rem.leading();
    typename P::Exponent e;
    for (std::size_t i = 0; i < N; ++i) {
      e[i] = lr.exp[i] - lb.exp[i];
      if (e[i] < 0) return std::nullopt;
    }
    BigInt qc, rc;
    boost::multiprecision::divide_qr(lr.coef, lb.coef, qc, rc);
    if (rc != 0) return std::nullopt;
    rem -= b.times_monomial(e, qc);
    quot.push_back({e, std::move(qc)});
  }
  return P::from_terms(std::move(quot));
}

}  // namespace macmp
