#pragma once

// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "foulkes/integer_partition.hpp"

namespace oracle {

using foulkes::IntegerPartition;

// Bell numbers via the Bell triangle.
inline long long bell(int n) {
  std::vector<long long> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<long long> next{row.back()};
    for (long long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

// All set-partitions of {0..r-1} as canonical label vectors, by collapsing
// every function {0..r-1} → {0..r-1}.
inline std::set<std::vector<int>> all_set_partitions(int r) {
  std::set<std::vector<int>> out;
  std::vector<int> f(r, 0);
  while (true) {
    std::map<int, int> relabel;
    std::vector<int> canon(r);
    for (int k = 0; k < r; ++k) canon[k] = relabel.try_emplace(f[k], static_cast<int>(relabel.size())).first->second;
    out.insert(canon);
    int pos = 0;
    while (pos < r && ++f[pos] == r) f[pos++] = 0;
    if (pos == r) break;
  }
  return out;
}

inline IntegerPartition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return IntegerPartition::from_unsorted(parts);
}

// χ^λ(ρ) by the Frobenius formula: the coefficient of x^{λ+δ} in
// a_δ · p_ρ, with ℓ(λ) variables. p_ρ is expanded with exponents capped by
// λ+δ, then a_δ contributes Σ_σ sgn(σ) [x^{λ+δ−σ(δ)}] p_ρ.
inline long long frobenius_character(const IntegerPartition& lambda, const IntegerPartition& rho) {
  int l = static_cast<int>(lambda.length());
  if (l == 0) return 1;
  std::vector<int> target(l);
  for (int i = 0; i < l; ++i) target[i] = lambda[i] + l - 1 - i;
  using Poly = std::map<std::vector<int>, long long>;
  Poly poly{{std::vector<int>(l, 0), 1}};
  for (int k : rho.parts()) {
    Poly next;
    for (const auto& [exps, c] : poly)
      for (int i = 0; i < l; ++i) {
        if (exps[i] + k > target[i]) continue;
        auto e = exps;
        e[i] += k;
        next[e] += c;
      }
    poly = std::move(next);
  }
  long long total = 0;
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> want(l);
    bool ok = true;
    for (int i = 0; i < l; ++i) {
      want[i] = target[i] - (l - 1 - perm[i]);
      ok = ok && want[i] >= 0;
    }
    if (!ok) continue;
    auto it = poly.find(want);
    if (it == poly.end()) continue;
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -it->second : it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <typename Visit>
void for_each_permutation(int n, Visit&& visit) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do visit(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// p_{μ,λ} = (1/r!) Σ_{σ ∈ S_r} fix_μ(σ) χ^λ(σ), every permutation summed
// individually, fixed points found by applying σ to each set-partition.
inline long long permutation_module_multiplicity(const IntegerPartition& mu, const IntegerPartition& lambda) {
  int r = mu.size();
  std::vector<std::vector<int>> of_shape;
  for (const auto& labels : all_set_partitions(r)) {
    std::vector<int> sizes(r, 0);
    for (int l : labels) ++sizes[l];
    sizes.erase(std::remove(sizes.begin(), sizes.end(), 0), sizes.end());
    if (IntegerPartition::from_unsorted(sizes) == mu) of_shape.push_back(labels);
  }
  std::map<IntegerPartition, long long> chi;
  long long total = 0;
  for_each_permutation(r, [&](const std::vector<int>& s) {
    long long fix = 0;
    for (const auto& labels : of_shape) {
      // σ fixes the partition iff k ~ l ⇔ σ(k) ~ σ(l)
      bool fixed = true;
      for (int a = 0; a < r && fixed; ++a)
        for (int b = a + 1; b < r && fixed; ++b)
          fixed = (labels[a] == labels[b]) == (labels[s[a]] == labels[s[b]]);
      fix += fixed;
    }
    auto rho = cycle_type(s);
    auto it = chi.find(rho);
    if (it == chi.end()) it = chi.emplace(rho, frobenius_character(lambda, rho)).first;
    total += fix * it->second;
  });
  return total / factorial(r);
}

// ⟨1↑ from S_m ≀ S_n, χ^α⟩ by summing χ^α over the wreath product, listed
// as the permutations of {0..mn-1} that map blocks of size m onto blocks.
inline long long wreath_induced_multiplicity(int m, int n, const IntegerPartition& alpha) {
  std::map<IntegerPartition, long long> chi;
  long long total = 0, order = 0;
  for_each_permutation(m * n, [&](const std::vector<int>& s) {
    for (int j = 0; j < n; ++j)
      for (int i = 1; i < m; ++i)
        if (s[j * m + i] / m != s[j * m] / m) return;
    ++order;
    auto rho = cycle_type(s);
    auto it = chi.find(rho);
    if (it == chi.end()) it = chi.emplace(rho, frobenius_character(alpha, rho)).first;
    total += it->second;
  });
  return total / order;
}

// Diagram product via breadth-first search on an explicit graph. Points of a
// diagram on 2r points are 0..r-1 north, r..2r-1 south; blocks are given as
// label vectors. Returns the closed-component count and canonical labels.
inline std::pair<int, std::vector<int>> concatenate(const std::vector<int>& x, const std::vector<int>& y, int r) {
  int nodes = 3 * r;
  std::vector<std::vector<int>> adj(nodes);
  auto connect = [&](const std::vector<int>& d, int offset) {
    for (int a = 0; a < 2 * r; ++a)
      for (int b = a + 1; b < 2 * r; ++b)
        if (d[a] == d[b]) {
          adj[offset + a].push_back(offset + b);
          adj[offset + b].push_back(offset + a);
        }
  };
  connect(x, 0);
  connect(y, r);
  std::vector<int> comp(nodes, -1);
  int count = 0;
  for (int s = 0; s < nodes; ++s) {
    if (comp[s] != -1) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = count;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (comp[v] == -1) {
          comp[v] = count;
          q.push(v);
        }
    }
    ++count;
  }
  std::set<int> outer;
  for (int k = 0; k < r; ++k) outer.insert(comp[k]);
  for (int k = 2 * r; k < 3 * r; ++k) outer.insert(comp[k]);
  std::set<int> middle;
  for (int k = r; k < 2 * r; ++k)
    if (!outer.count(comp[k])) middle.insert(comp[k]);
  std::vector<int> raw;
  for (int k = 0; k < r; ++k) raw.push_back(comp[k]);
  for (int k = 2 * r; k < 3 * r; ++k) raw.push_back(comp[k]);
  std::map<int, int> relabel;
  std::vector<int> canon;
  for (int c : raw) canon.push_back(relabel.try_emplace(c, static_cast<int>(relabel.size())).first->second);
  return {static_cast<int>(middle.size()), canon};
}

// Rank modulo a large prime, by ordinary Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows) {
  const std::int64_t p = 1'000'000'007;
  auto norm = [&](std::int64_t v) { return ((v % p) + p) % p; };
  auto power = [&](std::int64_t b, std::int64_t e) {
    std::int64_t res = 1;
    b = norm(b);
    while (e) {
      if (e & 1) res = res * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return res;
  };
  for (auto& row : rows)
    for (auto& v : row) v = norm(v);
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::int64_t inv = power(rows[rank][c], p - 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      std::int64_t f = rows[i][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = norm(rows[i][k] - f * rows[rank][k]);
    }
    ++rank;
  }
  return rank;
}

// Partitions of k fitting in a width × height box, by listing all partitions.
inline long long box_count(int k, int width, int height) {
  long long n = 0;
  for (const auto& p : foulkes::partitions_of(k))
    n += static_cast<int>(p.length()) <= height && p.first() <= width;
  return n;
}

}  // namespace oracle
