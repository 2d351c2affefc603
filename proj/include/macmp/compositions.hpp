#pragma once

// Compositions and their combinatorial data. Permutations are stored as
// 1-based images: perm[i-1] = w(i).

#include <string>
#include <utility>
#include <vector>

namespace macmp {

using Composition = std::vector<int>;
using Permutation = std::vector<int>;

/// Parses "a,b,c"; errors carry the offending position.
Composition parse_composition(const std::string& text);
std::string composition_string(const Composition& c);

int weight(const Composition& c);
int max_part(const Composition& c);
bool is_partition(const Composition& c);

Composition sort_dominant(const Composition& c);
Composition antidominant(const Composition& c);

/// Labels entries 1..n from the largest to the smallest, left to right.
Permutation w_plus_inv(const Composition& c);
Permutation w_plus(const Composition& c);
Permutation inverse(const Permutation& p);

/// Doubled values 2 rho(c)_i = n + 1 - 2 w_plus_inv(i).
std::vector<int> rho_of(const Composition& c);

struct SpectralData {
  std::vector<int> two_rho;
  Permutation w_plus;
  Permutation w_plus_inv;
  /// (t exponent, q exponent) of the rescaled Murphy eigenvalue for each i.
  std::vector<std::pair<int, int>> eigen_exponents;
};
SpectralData spectral_data(const Composition& c);

/// Subtracts 1 from every nonzero part.
Composition star(const Composition& c);
/// Conjugate of the sorted composition; trailing zeros dropped.
Composition conjugate(const Composition& c);
/// m[i] = number of parts equal to i, for i = 0..max part.
std::vector<int> multiplicities(const Composition& c);

/// mu <= lambda in dominance order; LengthMismatch on unequal lengths.
bool dominance_leq(const Composition& mu, const Composition& lambda);
/// All distinct rearrangements, in lexicographic order.
std::vector<Composition> orbit(const Composition& c);

/// All compositions of length n with parts in [0, max].
std::vector<Composition> all_compositions(int n, int max);
/// All partitions with at most n parts, each at most max, padded to length n.
std::vector<Composition> partitions_in_box(int n, int max);

}  // namespace macmp
