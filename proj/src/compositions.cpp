#include "macmp/compositions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "macmp/errors.hpp"

namespace macmp {

Composition parse_composition(const std::string& text) {
  Composition c;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string item = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("invalid part '" + item + "' at position " + std::to_string(pos));
    if (item.size() > 6) throw ParseError("part too large at position " + std::to_string(pos));
    c.push_back(std::stoi(item));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return c;
}

std::string composition_string(const Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

int weight(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

int max_part(const Composition& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()); }

bool is_partition(const Composition& c) { return std::is_sorted(c.begin(), c.end(), std::greater<>()); }

Composition sort_dominant(const Composition& c) {
  Composition r = c;
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

Composition antidominant(const Composition& c) {
  Composition r = c;
  std::sort(r.begin(), r.end());
  return r;
}

Permutation w_plus_inv(const Composition& c) {
  const int n = static_cast<int>(c.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return c[a] > c[b]; });
  Permutation p(n);
  for (int label = 0; label < n; ++label) p[idx[label]] = label + 1;
  return p;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

Permutation w_plus(const Composition& c) { return inverse(w_plus_inv(c)); }

std::vector<int> rho_of(const Composition& c) {
  const int n = static_cast<int>(c.size());
  Permutation w = w_plus_inv(c);
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = n + 1 - 2 * w[i];
  return r;
}

SpectralData spectral_data(const Composition& c) {
  const int n = static_cast<int>(c.size());
  SpectralData d;
  d.two_rho = rho_of(c);
  d.w_plus_inv = w_plus_inv(c);
  d.w_plus = inverse(d.w_plus_inv);
  for (int i = 1; i <= n; ++i) d.eigen_exponents.emplace_back(n + 1 - i - d.w_plus_inv[i - 1], c[i - 1]);
  return d;
}

Composition star(const Composition& c) {
  Composition r = c;
  for (auto& x : r) x = std::max(x - 1, 0);
  return r;
}

Composition conjugate(const Composition& c) {
  Composition r;
  for (int k = 1; k <= max_part(c); ++k)
    r.push_back(static_cast<int>(std::count_if(c.begin(), c.end(), [k](int x) { return x >= k; })));
  return r;
}

std::vector<int> multiplicities(const Composition& c) {
  std::vector<int> m(max_part(c) + 1, 0);
  for (int x : c) ++m[x];
  return m;
}

bool dominance_leq(const Composition& mu, const Composition& lambda) {
  if (mu.size() != lambda.size())
    throw LengthMismatch("dominance comparison of lengths " + std::to_string(mu.size()) + " and " +
                         std::to_string(lambda.size()));
  int s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    s += lambda[i] - mu[i];
    if (s < 0) return false;
  }
  return s == 0;
}

std::vector<Composition> orbit(const Composition& c) {
  Composition r = antidominant(c);
  std::vector<Composition> out;
  do out.push_back(r);
  while (std::next_permutation(r.begin(), r.end()));
  return out;
}

std::vector<Composition> all_compositions(int n, int max) {
  std::vector<Composition> out;
  Composition c(n, 0);
  while (true) {
    out.push_back(c);
    int k = n - 1;
    while (k >= 0 && c[k] == max) c[k--] = 0;
    if (k < 0) break;
    ++c[k];
  }
  return out;
}

std::vector<Composition> partitions_in_box(int n, int max) {
  std::vector<Composition> out;
  for (const auto& c : all_compositions(n, max))
    if (is_partition(c)) out.push_back(c);
  return out;
}

}  // namespace macmp
