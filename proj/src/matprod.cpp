#include "macmp/matprod.hpp"

#include <mutex>
#include <sstream>

namespace macmp {

namespace {

int default_rank(const Composition& lambda, int r) {
  int m = max_part(lambda);
  if (r < 0) return m;
  if (r < m) throw UsageError("rank " + std::to_string(r) + " is below the largest part " + std::to_string(m));
  return r;
}

int family_key(int level, int f) { return level * 100 + f; }

/// Rank-reduced L-matrices with families keyed by level; built once.
const OpMatrix& tilde_at_level(int j) {
  static std::mutex mu;
  static std::map<int, OpMatrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(j);
  if (it == cache.end()) it = cache.emplace(j, relabel_level(build_tildeL(j), j)).first;
  return it->second;
}

QTRat cached_trace(const OscWord& w) {
  static std::mutex mu;
  static std::map<OscWord, QTRat> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  QTRat v = trace_closed_form(w);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(w, v);
  return v;
}

struct RowPath {
  std::vector<int> nu;  // nu_r, ..., nu_1, 0
  int xdeg = 0;
  FamilyWords atoms;    // keyed by family_key(level, f)
};

void extend_paths(int level, int row, RowPath& cur, std::vector<RowPath>& out) {
  if (level == 0) {
    out.push_back(cur);
    return;
  }
  const OpMatrix& T = tilde_at_level(level);
  for (int col = 0; col < T.cols; ++col) {
    const OpSum& entry = T.at(row, col);
    if (entry.empty()) continue;
    for (const auto& term : entry) {
      if (!term.scalar.is_one()) throw InternalAssertion("unexpected scalar in a rank-reduced L-matrix");
      RowPath next = cur;
      next.nu.push_back(col);
      next.xdeg += term.xdeg;
      for (const auto& [f, w] : term.factors) {
        auto& dst = next.atoms[f];
        dst.insert(dst.end(), w.begin(), w.end());
      }
      extend_paths(level - 1, col, next, out);
    }
  }
}

const std::vector<RowPath>& row_paths(int top, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<RowPath>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(top, r);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<RowPath> out;
    RowPath start;
    start.nu.push_back(top);
    it = cache.emplace(key, std::move(out)).first;
    extend_paths(r, top, start, it->second);
  }
  return it->second;
}

/// Nontrivial family keys of a rank-r product.
std::vector<std::pair<int, int>> nontrivial_families(int r) {
  std::vector<std::pair<int, int>> fams;
  for (int level = 2; level <= r; ++level)
    for (int f = 2; f <= level; ++f) fams.emplace_back(level, f);
  return fams;
}

template <class Visit>
void enumerate_configurations(const Composition& lambda, int r, Visit&& visit) {
  const int n = static_cast<int>(lambda.size());
  for (int level = 1; level <= r; ++level) tilde_at_level(level);
  std::vector<const std::vector<RowPath>*> paths(n);
  for (int i = 0; i < n; ++i) paths[i] = &row_paths(lambda[i], r);
  // Cross product of the per-row path sets; unbalanced words are rejected by assemble().
  std::vector<const RowPath*> chosen(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      visit(chosen);
      return;
    }
    for (const auto& p : *paths[i]) {
      chosen[i] = &p;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

bool assemble(const std::vector<const RowPath*>& chosen, int r, Configuration& out, bool keep_paths) {
  const int n = static_cast<int>(chosen.size());
  out.monomial.assign(n, 0);
  out.words.clear();
  for (const auto& [level, f] : nontrivial_families(r)) {
    OscWord w;
    int height = 0;
    for (const auto* p : chosen) {
      auto it = p->atoms.find(family_key(level, f));
      if (it == p->atoms.end()) continue;
      for (const auto& a : it->second) {
        if (a.kind == OscAtom::Kind::Raise) ++height;
        if (a.kind == OscAtom::Kind::Lower) --height;
      }
      w.insert(w.end(), it->second.begin(), it->second.end());
    }
    if (height != 0) return false;
    w.push_back(OscAtom::kpow(0, f - 1));
    out.words.emplace(std::make_pair(level, f), std::move(w));
  }
  for (int i = 0; i < n; ++i) out.monomial[i] = chosen[i]->xdeg;
  if (keep_paths) {
    out.row_paths.clear();
    for (const auto* p : chosen) out.row_paths.push_back(p->nu);
  }
  out.trace = QTRat(1);
  for (const auto& [key, w] : out.words) {
    out.trace *= cached_trace(w);
    if (out.trace.is_zero()) return false;
  }
  return true;
}

}  // namespace

QTRat omega_norm(const Composition& lambda, int r) {
  Composition conj = conjugate(lambda);
  conj.resize(std::max<std::size_t>(conj.size(), static_cast<std::size_t>(std::max(r, 0))), 0);
  QTRat inv(1);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) inv *= QTRat(qt::one_minus(j - i, conj[i - 1] - conj[j - 1]));
  return QTRat(1) / inv;
}

std::vector<Configuration> expand_configurations(const Composition& lambda, int r) {
  r = default_rank(lambda, r);
  std::vector<Configuration> out;
  enumerate_configurations(lambda, r, [&](const std::vector<const RowPath*>& chosen) {
    Configuration c;
    if (assemble(chosen, r, c, true)) out.push_back(std::move(c));
  });
  return out;
}

std::string to_string(const Configuration& c) {
  std::ostringstream os;
  os << "paths";
  for (const auto& p : c.row_paths) {
    os << " ";
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? ">" : "") << p[k];
  }
  std::string mono = monomial_string(c.monomial);
  os << " | " << (mono.empty() ? "1" : mono) << " | ";
  bool first = true;
  for (const auto& [key, w] : c.words) {
    os << (first ? "" : " ; ") << "Tr" << key.first << "." << key.second << "[" << to_string(w) << "]";
    first = false;
  }
  if (first) os << "1";
  os << " = " << to_string(c.trace);
  return os.str();
}

XPoly trace_sum(const Composition& lambda, int r) {
  r = default_rank(lambda, r);
  const int n = static_cast<int>(lambda.size());
  std::map<Exponents, QTRat> acc;
  Configuration c;
  enumerate_configurations(lambda, r, [&](const std::vector<const RowPath*>& chosen) {
    if (!assemble(chosen, r, c, false)) return;
    auto [it, inserted] = acc.try_emplace(c.monomial, c.trace);
    if (!inserted) it->second += c.trace;
  });
  XPoly f(n);
  for (const auto& [e, v] : acc) f.add_term(e, v);
  return f;
}

XPoly compute_f(const Composition& lambda, int r) {
  r = default_rank(lambda, r);
  static std::mutex mu;
  static std::map<std::pair<Composition, int>, XPoly> cache;
  auto key = std::make_pair(lambda, r);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int n = static_cast<int>(lambda.size());
  XPoly f = r == 0 ? XPoly::constant(n, QTRat(1)) : trace_sum(lambda, r) / omega_norm(lambda, r);
  if (!f.is_homogeneous() || f.degree() != weight(lambda))
    throw InternalNonPolynomial("f for (" + composition_string(lambda) + ") is not homogeneous of degree " +
                                std::to_string(weight(lambda)));
  if (!f.coeff(lambda).is_one())
    throw InternalNonPolynomial("f for (" + composition_string(lambda) + ") is not monic: leading coefficient " +
                                to_string(f.coeff(lambda)));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, f);
  return f;
}

XPoly transition(const Composition& lambda, const Composition& mu, int r) {
  r = default_rank(lambda, r);
  if (lambda.size() != mu.size()) throw LengthMismatch("transition between compositions of different lengths");
  for (int m : mu)
    if (m < 0 || m > r - 1) throw IndexOutOfRange("parts of mu must lie in [0, " + std::to_string(r - 1) + "]");
  const int n = static_cast<int>(lambda.size());
  const OpMatrix& T = tilde_at_level(r);
  Exponents mono(n, 0);
  FamilyWords words;
  for (int i = 0; i < n; ++i) {
    const OpSum& e = T.at(lambda[i], mu[i]);
    if (e.empty()) return XPoly(n);
    mono[i] = e[0].xdeg;
    for (const auto& [f, w] : e[0].factors) {
      auto& dst = words[f];
      dst.insert(dst.end(), w.begin(), w.end());
    }
  }
  QTRat value(1);
  for (int f = 2; f <= r; ++f) {
    OscWord w = words[family_key(r, f)];
    w.push_back(OscAtom::kpow(0, f - 1));
    value *= cached_trace(w);
  }
  return XPoly::monomial(mono, value);
}

QTRat recursion_prefactor(const Composition& lambda, int r) {
  std::vector<int> m = multiplicities(lambda);
  m.resize(std::max<std::size_t>(m.size(), static_cast<std::size_t>(r + 1)), 0);
  QTRat p(1);
  int partial = 0;
  for (int i = 1; i <= r - 1; ++i) {
    partial += m[i];
    p *= QTRat(qt::one_minus(i, partial));
  }
  return p;
}

RecursionReport check_recursion(const Composition& lambda) {
  RecursionReport rep;
  const int n = static_cast<int>(lambda.size());
  const int r = max_part(lambda);
  rep.rank = r;
  rep.lhs = compute_f(lambda);
  if (r == 0) {
    rep.prefactor = QTRat(1);
    rep.rhs = XPoly::constant(n, QTRat(1));
    rep.ok = rep.lhs == rep.rhs;
    return rep;
  }
  rep.prefactor = recursion_prefactor(lambda, r);
  XPoly sum(n);
  for (const auto& mu : orbit(star(lambda))) {
    XPoly T = transition(lambda, mu, r);
    if (T.is_zero()) continue;
    rep.transitions.emplace_back(mu, T);
    sum += T * compute_f(mu);
  }
  rep.rhs = sum * rep.prefactor;
  rep.ok = rep.lhs == rep.rhs;
  return rep;
}

bool verify_recursion(const Composition& lambda) { return check_recursion(lambda).ok; }

XPoly compute_P(const Composition& lambda) {
  if (!is_partition(lambda)) throw NotAPartition("(" + composition_string(lambda) + ") is not weakly decreasing");
  XPoly p(static_cast<int>(lambda.size()));
  for (const auto& mu : orbit(lambda)) p += compute_f(mu);
  return p;
}

GeneratingReport generating_trace(int r, int n) {
  if (r < 1 || n < 1) throw UsageError("generating trace needs r >= 1 and n >= 1");
  GeneratingReport rep;
  for (const auto& mu : all_compositions(n, r)) {
    std::vector<int> m = multiplicities(mu);
    m.resize(r + 1, 0);
    auto [it, inserted] = rep.lhs.try_emplace(m, XPoly(n));
    it->second += trace_sum(mu, r);
  }
  for (const auto& lambda : partitions_in_box(n, r)) {
    std::vector<int> m = multiplicities(lambda);
    m.resize(r + 1, 0);
    rep.rhs.emplace(m, compute_P(lambda) * omega_norm(lambda, r));
  }
  rep.ok = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace macmp
