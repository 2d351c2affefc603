#include "macmp/qtfield.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace macmp {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z (index = degree). Used for the gcd.

using UPoly = std::vector<BigInt>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

BigInt ucontent(const UPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly uscale(const UPoly& p, const BigInt& c) {
  UPoly r = p;
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

UPoly udivscalar(const UPoly& p, const BigInt& c) {
  UPoly r = p;
  for (auto& x : r) x /= c;
  return r;
}

// Primitive part with positive leading coefficient.
UPoly uprimitive(const UPoly& p) {
  if (p.empty()) return p;
  BigInt c = ucontent(p);
  if (p.back() < 0) c = -c;
  return c == 1 ? p : udivscalar(p, c);
}

// Pseudo-remainder of a by b (b nonzero).
UPoly uprem(UPoly a, const UPoly& b) {
  const int db = deg(b);
  const BigInt& lb = b.back();
  while (!a.empty() && deg(a) >= db) {
    BigInt la = a.back();
    int shift = deg(a) - db;
    for (auto& x : a) x *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  if (a.empty()) return uprimitive(b).empty() ? b : uscale(uprimitive(b), ucontent(b));
  if (b.empty()) return uscale(uprimitive(a), ucontent(a));
  BigInt c = boost::multiprecision::gcd(ucontent(a), ucontent(b));
  a = uprimitive(a);
  b = uprimitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) {
      a = UPoly{1};
      break;
    }
    UPoly r = uprem(a, b);
    a = std::move(b);
    b = uprimitive(r);
  }
  return uscale(uprimitive(a), c);
}

// Exact division; caller guarantees b | a.
UPoly udiv_exact(UPoly a, const UPoly& b) {
  const int db = deg(b);
  if (deg(a) < db) return {};
  UPoly q(deg(a) - db + 1);
  const BigInt& lb = b.back();
  while (!a.empty() && deg(a) >= db) {
    int shift = deg(a) - db;
    BigInt c = a.back() / lb;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) throw InternalNonDivisibility("univariate exact division left a remainder");
  trim(q);
  return q;
}

bool is_unit(const UPoly& p) { return p.size() == 1 && (p[0] == 1 || p[0] == -1); }

// ---------------------------------------------------------------------------
// Recursive dense bivariate polynomials: index = t-degree, coefficients in Z[q].

using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int bdeg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

BPoly to_bpoly(const QTPoly& p) {
  BPoly r(p.is_zero() ? 0 : p.max_degree(1) + 1);
  for (const auto& term : p.terms()) {
    auto& c = r[term.exp[1]];
    if (c.size() <= static_cast<std::size_t>(term.exp[0])) c.resize(term.exp[0] + 1);
    c[term.exp[0]] = term.coef;
  }
  return r;
}

QTPoly from_bpoly(const BPoly& p) {
  std::vector<QTPoly::Term> terms;
  for (std::size_t ti = 0; ti < p.size(); ++ti)
    for (std::size_t qi = 0; qi < p[ti].size(); ++qi)
      if (p[ti][qi] != 0) terms.push_back({{static_cast<int>(qi), static_cast<int>(ti)}, p[ti][qi]});
  return QTPoly::from_terms(std::move(terms));
}

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? uscale(uprimitive(c), ucontent(c)) : ugcd(g, c);
    if (is_unit(g)) break;
  }
  return g;
}

BPoly bdiv_coeff(const BPoly& p, const UPoly& c) {
  BPoly r = p;
  if (is_unit(c)) {
    if (c[0] == -1)
      for (auto& x : r) x = uscale(x, BigInt(-1));
    return r;
  }
  for (auto& x : r)
    if (!x.empty()) x = udiv_exact(x, c);
  return r;
}

BPoly bprimitive(const BPoly& p) {
  if (p.empty()) return p;
  return bdiv_coeff(p, bcontent(p));
}

BPoly bprem(BPoly a, const BPoly& b) {
  const int db = bdeg(b);
  const UPoly& lb = b.back();
  while (!a.empty() && bdeg(a) >= db) {
    UPoly la = a.back();
    int shift = bdeg(a) - db;
    for (auto& x : a) x = umul(x, lb);
    for (int i = 0; i <= db; ++i) a[i + shift] = usub(a[i + shift], umul(la, b[i]));
    btrim(a);
  }
  return a;
}

BPoly bgcd(BPoly a, BPoly b) {
  UPoly ca = bcontent(a), cb = bcontent(b);
  UPoly c = ugcd(ca, cb);
  a = bdiv_coeff(a, ca);
  b = bdiv_coeff(b, cb);
  if (bdeg(a) < bdeg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (bdeg(b) == 0) {
      a = BPoly{UPoly{1}};
      break;
    }
    BPoly r = bprem(a, b);
    a = std::move(b);
    b = bprimitive(r);
  }
  a = bprimitive(a);
  for (auto& x : a) x = umul(x, c);
  return a;
}

QTPoly positive_lowest(QTPoly p) {
  if (!p.is_zero() && p.terms().front().coef < 0) return -p;
  return p;
}

QTPoly shift_down(const QTPoly& p, const QTPoly::Exponent& e) {
  return p.times_monomial({-e[0], -e[1]}, 1);
}

QTPoly exact_quotient(const QTPoly& a, const QTPoly& b) {
  if (b.is_one()) return a;
  auto r = divide_exact(a, b);
  if (!r) throw InternalNonDivisibility("gcd does not divide its argument");
  return *r;
}

}  // namespace

QTPoly gcd(const QTPoly& a, const QTPoly& b) {
  if (a.is_zero()) return positive_lowest(b);
  if (b.is_zero()) return positive_lowest(a);
  QTPoly::Exponent ma{a.min_degree(0), a.min_degree(1)};
  QTPoly::Exponent mb{b.min_degree(0), b.min_degree(1)};
  QTPoly::Exponent m{std::min(ma[0], mb[0]), std::min(ma[1], mb[1])};
  QTPoly ar = shift_down(a, ma), br = shift_down(b, mb);
  if (ar.is_constant() || br.is_constant()) {
    BigInt g = boost::multiprecision::gcd(ar.content(), br.content());
    return QTPoly::monomial(m, g);
  }
  if (ar == br || ar == -br) return positive_lowest(ar).times_monomial(m, 1);
  QTPoly g = from_bpoly(bgcd(to_bpoly(ar), to_bpoly(br)));
  return positive_lowest(g).times_monomial(m, 1);
}

// ---------------------------------------------------------------------------

QTRat::QTRat(QTPoly num, QTPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) {
    den_ = QTPoly(1);
    return;
  }
  if (!den_.is_one()) {
    QTPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  fix_sign();
}

void QTRat::fix_sign() {
  if (den_.terms().front().coef < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QTRat QTRat::monomial(int qexp, int texp, const BigInt& c) {
  QTPoly n = qt::mono(std::max(qexp, 0), std::max(texp, 0), c);
  QTPoly d = qt::mono(std::max(-qexp, 0), std::max(-texp, 0));
  if (d.is_one()) return QTRat(n);
  return QTRat(std::move(n), std::move(d));
}

QTRat QTRat::operator-() const { return QTRat(-num_, den_, Reduced{}); }

QTRat& QTRat::operator+=(const QTRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    QTPoly n = num_ + o.num_;
    if (den_.is_one()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = QTRat(std::move(n), den_);
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    if (num_.is_zero()) den_ = QTPoly(1);
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    if (num_.is_zero()) den_ = QTPoly(1);
    return *this;
  }
  QTPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = QTPoly(1);
    return *this;
  }
  QTPoly b1 = exact_quotient(den_, g);
  QTPoly d1 = exact_quotient(o.den_, g);
  QTPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = QTRat();
  QTPoly g2 = gcd(n, g);
  num_ = exact_quotient(n, g2);
  den_ = b1 * d1 * exact_quotient(g, g2);
  fix_sign();
  return *this;
}

QTRat& QTRat::operator-=(const QTRat& o) { return *this += -o; }

QTRat& QTRat::operator*=(const QTRat& o) {
  if (is_zero() || o.is_zero()) return *this = QTRat();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  QTPoly g1 = o.den_.is_one() ? QTPoly(1) : gcd(num_, o.den_);
  QTPoly g2 = den_.is_one() ? QTPoly(1) : gcd(o.num_, den_);
  QTPoly n = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
  QTPoly d = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  fix_sign();
  return *this;
}

QTRat& QTRat::operator/=(const QTRat& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  QTRat inv(o.den_, o.num_, Reduced{});
  inv.fix_sign();
  return *this *= inv;
}

QTRat QTRat::pow(int e) const {
  if (e < 0) return QTRat(1) / pow(-e);
  QTRat result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

QTRat arith(const QTRat& a, const QTRat& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Div:
      return a / b;
  }
  return {};
}

QTRat bracket(int m) { return bracket_shifted(m, 0); }

QTRat bracket_shifted(int m, int c) {
  return QTRat(qt::one_minus(c, m), qt::one_minus(0, 1));
}

// ---------------------------------------------------------------------------
// Specialization

namespace {

Rational pow_rational(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

QTRat evaluate_poly(const QTPoly& p, const Specialization& rule) {
  using QRule = Specialization::QRule;
  std::map<QTPoly::Exponent, Rational> acc;
  for (const auto& term : p.terms()) {
    int a = term.exp[0], b = term.exp[1];
    QTPoly::Exponent e{0, 0};
    Rational factor = Rational(term.coef);
    switch (rule.q_rule) {
      case QRule::Keep:
        e[0] = a;
        break;
      case QRule::Zero:
        if (a > 0) factor = 0;
        break;
      case QRule::EqualsT:
        e[1] += a;
        break;
      case QRule::One:
        break;
      case QRule::Value:
        factor *= pow_rational(rule.q_value, a);
        break;
    }
    if (factor == 0) continue;
    if (rule.t_value) {
      // q := t combined with a numeric t moves the q-power into t as well.
      factor *= pow_rational(*rule.t_value, b + e[1]);
      e[1] = 0;
    } else {
      e[1] += b;
    }
    acc[e] += factor;
  }
  BigInt lcm = 1;
  for (const auto& [e, c] : acc) {
    const BigInt d = boost::multiprecision::denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<QTPoly::Term> terms;
  for (const auto& [e, c] : acc) {
    if (c == 0) continue;
    terms.push_back({e, boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c))});
  }
  QTPoly num = QTPoly::from_terms(std::move(terms));
  if (lcm == 1) return QTRat(num);
  return QTRat(std::move(num), QTPoly(lcm));
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(n, d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a rational number: '" + s + "'");
  }
}

}  // namespace

Specialization Specialization::parse(const std::string& text) {
  Specialization rule;
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in '" + item + "'");
    std::string name = item.substr(0, eq), value = item.substr(eq + 1);
    if (name == "q") {
      if (value == "0") {
        rule.q_rule = QRule::Zero;
      } else if (value == "t") {
        rule.q_rule = QRule::EqualsT;
      } else if (value == "1") {
        rule.q_rule = QRule::One;
      } else {
        rule.q_rule = QRule::Value;
        rule.q_value = parse_rational(value);
      }
    } else if (name == "t") {
      rule.t_value = parse_rational(value);
    } else {
      throw ParseError("unknown parameter '" + name + "'");
    }
    any = true;
  }
  if (!any) throw ParseError("empty specialization");
  return rule;
}

QTRat specialize(const QTRat& a, const Specialization& rule) {
  QTRat den = evaluate_poly(a.den(), rule);
  if (den.is_zero()) throw SpecializationPole("denominator " + to_string(a.den()) + " vanishes");
  return evaluate_poly(a.num(), rule) / den;
}

Rational to_rational(const QTRat& a) {
  if (!a.is_constant()) throw UsageError("rational function " + to_string(a) + " is not a constant");
  return Rational(a.num().constant_coefficient(), a.den().constant_coefficient());
}

QTRat from_rational(const Rational& r) {
  return QTRat(QTPoly(boost::multiprecision::numerator(r)), QTPoly(boost::multiprecision::denominator(r)));
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

void append_var(std::ostream& os, const char* name, int e, bool latex, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) os << (latex ? " " : "*");
  os << name;
  if (e != 1) {
    if (latex)
      os << "^{" << e << "}";
    else
      os << "^" << e;
  }
  first_factor = false;
}

std::string poly_string(const QTPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : p.terms()) {
    BigInt c = term.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool is_const = term.exp[0] == 0 && term.exp[1] == 0;
    bool first_factor = true;
    if (c != 1 || is_const) {
      os << c;
      first_factor = false;
    }
    append_var(os, "q", term.exp[0], latex, first_factor);
    append_var(os, "t", term.exp[1], latex, first_factor);
  }
  return os.str();
}

}  // namespace

std::string to_string(const QTPoly& p) { return poly_string(p, false); }

std::string to_string(const QTRat& a) {
  std::string n = poly_string(a.num(), false);
  if (a.den().is_one()) return n;
  if (a.num().size() > 1) n = "(" + n + ")";
  std::string d = poly_string(a.den(), false);
  if (a.den().size() > 1 || !a.den().is_constant()) d = "(" + d + ")";
  return n + "/" + d;
}

std::string to_latex(const QTRat& a) {
  std::string n = poly_string(a.num(), true);
  if (a.den().is_one()) return n;
  return "\\frac{" + n + "}{" + poly_string(a.den(), true) + "}";
}

std::ostream& operator<<(std::ostream& os, const QTRat& a) { return os << to_string(a); }

namespace {

nlohmann::ordered_json poly_json(const QTPoly& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& term : p.terms()) {
    nlohmann::ordered_json coef;
    if (term.coef >= std::numeric_limits<std::int64_t>::min() &&
        term.coef <= std::numeric_limits<std::int64_t>::max())
      coef = static_cast<std::int64_t>(term.coef);
    else
      coef = term.coef.str();
    arr.push_back({term.exp[0], term.exp[1], coef});
  }
  return arr;
}

QTPoly poly_from_json(const nlohmann::ordered_json& arr) {
  if (!arr.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<QTPoly::Term> terms;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 3) throw ParseError("term must be [qexp, texp, coef]");
    int qe = item[0].get<int>(), te = item[1].get<int>();
    if (qe < 0 || te < 0) throw ParseError("negative exponent in polynomial");
    BigInt c = item[2].is_string() ? BigInt(item[2].get<std::string>()) : BigInt(item[2].get<std::int64_t>());
    terms.push_back({{qe, te}, c});
  }
  return QTPoly::from_terms(std::move(terms));
}

}  // namespace

nlohmann::ordered_json to_json(const QTRat& a) { return {{"num", poly_json(a.num())}, {"den", poly_json(a.den())}}; }

QTRat qtrat_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("rational function must have 'num' and 'den'");
  return QTRat(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace macmp
