#include "macmp/xring.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace macmp {

void XPoly::check_length(const Exponents& e) const {
  if (static_cast<int>(e.size()) != n_)
    throw LengthMismatch("exponent vector of length " + std::to_string(e.size()) + " in " +
                         std::to_string(n_) + " variables");
}

XPoly XPoly::constant(int n, const QTRat& c) {
  XPoly p(n);
  p.add_term(Exponents(n, 0), c);
  return p;
}

XPoly XPoly::monomial(const Exponents& e, const QTRat& c) {
  XPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

XPoly XPoly::var(int n, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("variable x" + std::to_string(i));
  Exponents e(n, 0);
  e[i - 1] = 1;
  return monomial(e);
}

void XPoly::add_term(const Exponents& e, const QTRat& c) {
  check_length(e);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QTRat XPoly::coeff(const Exponents& e) const {
  check_length(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? QTRat() : it->second;
}

int XPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool XPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (n_ != o.n_) throw LengthMismatch("adding polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (n_ != o.n_) throw LengthMismatch("subtracting polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

XPoly& XPoly::operator*=(const QTRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

XPoly& XPoly::operator/=(const QTRat& c) {
  if (c.is_zero()) throw DivisionByZero("dividing a polynomial by zero");
  for (auto& [e, x] : terms_) x /= c;
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.n_ != b.n_) throw LengthMismatch("multiplying polynomials in different variable counts");
  XPoly r(a.n_);
  Exponents e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

XPoly XPoly::times_monomial(const Exponents& e, const QTRat& c) const {
  check_length(e);
  XPoly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [ex, x] : terms_) {
    Exponents s = ex;
    for (int i = 0; i < n_; ++i) s[i] += e[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(s), c.is_one() ? x : x * c);
  }
  return r;
}

namespace {

void check_index(const XPoly& f, int i) {
  if (i < 1 || i >= f.nvars())
    throw IndexOutOfRange("transposition index " + std::to_string(i) + " for n = " +
                          std::to_string(f.nvars()));
}

}  // namespace

XPoly apply_s(const XPoly& f, int i) {
  check_index(f, i);
  XPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponents s = e;
    std::swap(s[i - 1], s[i]);
    r.add_term(s, c);
  }
  return r;
}

XPoly divided_difference(const XPoly& f, int i) {
  check_index(f, i);
  const int a = i - 1, b = i;
  // Long division by x_a - x_b, eliminating the highest power of x_a first.
  auto by_xa = [a](const Exponents& l, const Exponents& r) {
    if (l[a] != r[a]) return l[a] > r[a];
    return l < r;
  };
  std::map<Exponents, QTRat, decltype(by_xa)> rem(by_xa);
  const XPoly num = f - apply_s(f, i);
  for (const auto& [e, c] : num.terms()) rem.emplace(e, c);
  XPoly quot(f.nvars());
  while (!rem.empty()) {
    auto it = rem.begin();
    Exponents e = it->first;
    QTRat c = it->second;
    rem.erase(it);
    if (e[a] == 0) throw InternalNonDivisibility("divided difference left a remainder");
    --e[a];
    quot.add_term(e, c);
    ++e[b];
    auto [jt, inserted] = rem.try_emplace(e, c);
    if (!inserted) {
      jt->second += c;
      if (jt->second.is_zero()) rem.erase(jt);
    }
  }
  return quot;
}

XPoly demazure_T(const XPoly& f, int i) {
  XPoly h = divided_difference(f, i);
  const int n = f.nvars();
  Exponents ea(n, 0), eb(n, 0);
  ea[i - 1] = 1;
  eb[i] = 1;
  return f * QTRat::t() - h.times_monomial(ea, QTRat::t()) + h.times_monomial(eb);
}

XPoly demazure_T_inv(const XPoly& f, int i) {
  return (demazure_T(f, i) - f * (QTRat::t() - QTRat(1))) / QTRat::t();
}

XPoly shift_omega(const XPoly& f) {
  const int n = f.nvars();
  XPoly r(n);
  for (const auto& [e, c] : f.terms()) {
    Exponents s(n);
    for (int k = 0; k + 1 < n; ++k) s[k] = e[k + 1];
    s[n - 1] = e[0];
    r.add_term(s, e[0] == 0 ? c : c * QTRat::monomial(e[0], 0));
  }
  return r;
}

QTRat coeff_of(const XPoly& f, const Exponents& mu) { return f.coeff(mu); }

bool is_symmetric(const XPoly& f) {
  for (int i = 1; i < f.nvars(); ++i)
    if (!(apply_s(f, i) == f)) return false;
  return true;
}

QTRat eval_at_ones(const XPoly& f) {
  QTRat s;
  for (const auto& [e, c] : f.terms()) s += c;
  return s;
}

XPoly specialize(const XPoly& f, const Specialization& rule) {
  XPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, specialize(c, rule));
  return r;
}

std::vector<std::pair<Exponents, QTRat>> graded_terms(const XPoly& f) {
  std::vector<std::pair<Exponents, QTRat>> v(f.terms().begin(), f.terms().end());
  auto total = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::stable_sort(v.begin(), v.end(), [&](const auto& l, const auto& r) {
    int dl = total(l.first), dr = total(r.first);
    if (dl != dr) return dl > dr;
    return l.first > r.first;
  });
  return v;
}

std::string monomial_string(const Exponents& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(k + 1);
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

namespace {

bool is_negative_integer(const QTRat& c) {
  return c.is_constant() && c.num().constant_coefficient() < 0;
}

std::string latex_monomial(const Exponents& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += " ";
    s += "x_{" + std::to_string(k + 1) + "}";
    if (e[k] != 1) s += "^{" + std::to_string(e[k]) + "}";
  }
  return s;
}

}  // namespace

std::string to_string(const XPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c0] : graded_terms(f)) {
    QTRat c = c0;
    bool neg = is_negative_integer(c);
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono = monomial_string(e);
    if (mono.empty()) {
      os << to_string(c);
    } else if (c.is_one()) {
      os << mono;
    } else {
      std::string cs = to_string(c);
      bool wrap = c.is_polynomial() && c.num().size() > 1;
      os << (wrap ? "(" + cs + ")" : cs) << "*" << mono;
    }
  }
  return os.str();
}

std::string to_latex(const XPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c0] : graded_terms(f)) {
    QTRat c = c0;
    bool neg = is_negative_integer(c);
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono = latex_monomial(e);
    if (mono.empty()) {
      os << to_latex(c);
    } else if (c.is_one()) {
      os << mono;
    } else {
      std::string cs = to_latex(c);
      bool wrap = c.is_polynomial() && c.num().size() > 1;
      os << (wrap ? "\\left(" + cs + "\\right)" : cs) << " " << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const XPoly& f) { return os << to_string(f); }

nlohmann::ordered_json to_json(const XPoly& f) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = e;
    t["coef"] = to_json(c);
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json j;
  j["n"] = f.nvars();
  j["terms"] = std::move(terms);
  return j;
}

XPoly xpoly_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw ParseError("polynomial must have 'n' and 'terms'");
  XPoly f(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Exponents e = t.at("exp").get<Exponents>();
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
      throw ParseError("negative exponent");
    f.add_term(e, qtrat_from_json(t.at("coef")));
  }
  return f;
}

}  // namespace macmp
