#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "foulkes/error.hpp"
#include "foulkes/integer_partition.hpp"
#include "foulkes/limits.hpp"
#include "foulkes/set_partition.hpp"

namespace foulkes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// z_ρ = ∏ i^{m_i} m_i!, the order of the centraliser of a permutation of type ρ.
inline BigInt centralizer_order(const IntegerPartition& rho) {
  BigInt out = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) out *= part;
    out *= factorial(m);
  }
  return out;
}

// Conjugacy classes of S_r: cycle types in reverse-lexicographic order with
// their sizes r!/z_ρ.
struct ClassData {
  int r = 0;
  std::vector<IntegerPartition> cycle_types;
  std::vector<BigInt> class_sizes;
  BigInt group_order;
};

inline const ClassData& class_data(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ClassData>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[r];
  if (!slot) {
    auto data = std::make_unique<ClassData>();
    data->r = r;
    data->group_order = factorial(r);
    data->cycle_types = partitions_of(r);
    for (const auto& rho : data->cycle_types) data->class_sizes.push_back(data->group_order / centralizer_order(rho));
    slot = std::move(data);
  }
  return *slot;
}

// A permutation (0-based images) of cycle type ρ, cycles on consecutive points.
inline std::vector<int> representative_permutation(const IntegerPartition& rho) {
  std::vector<int> perm(rho.size());
  int start = 0;
  for (int len : rho.parts()) {
    for (int k = 0; k < len; ++k) perm[start + k] = start + (k + 1) % len;
    start += len;
  }
  return perm;
}

namespace detail {

// χ^λ on the class whose remaining cycle lengths are rho[from..], via
// border-strip removal on beta-sets.
inline std::int64_t mn_recurse(const std::vector<int>& lambda, const std::vector<int>& rho, std::size_t from,
                               std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  if (from == rho.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, from);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int len = static_cast<int>(lambda.size());
  const int k = rho[from];
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);  // strictly decreasing
  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta) between += (b > target && b < beta[i]) ? 1 : 0;
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    std::vector<int> mu;
    for (int j = 0; j < len; ++j) {
      int part = next[j] - (len - 1 - j);
      if (part > 0) mu.push_back(part);
    }
    std::int64_t sub = mn_recurse(mu, rho, from + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

// χ^λ(ρ) by the Murnaghan–Nakayama rule. Results are cached per (λ, ρ).
inline std::int64_t mn_character(const IntegerPartition& lambda, const IntegerPartition& rho) {
  if (lambda.size() != rho.size()) throw SizeMismatch("mn_character: |λ| != |ρ|");
  static std::mutex mu;
  static std::map<std::pair<IntegerPartition, IntegerPartition>, std::int64_t> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({lambda, rho}); it != cache.end()) return it->second;
  }
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  std::int64_t value = detail::mn_recurse(lambda.parts(), rho.parts(), 0, memo);
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(lambda, rho), value);
  return value;
}

inline std::int64_t character_degree(const IntegerPartition& lambda) {
  std::vector<int> ones(lambda.size(), 1);
  return mn_character(lambda, IntegerPartition(ones));
}

// (1/r!) Σ_ρ |class ρ| χ^λ(ρ) χ^μ(ρ).
inline Rational character_inner_product(const IntegerPartition& lambda, const IntegerPartition& mu) {
  if (lambda.size() != mu.size()) throw SizeMismatch("character_inner_product: sizes differ");
  const auto& cd = class_data(lambda.size());
  BigInt sum = 0;
  for (std::size_t c = 0; c < cd.cycle_types.size(); ++c)
    sum += cd.class_sizes[c] * mn_character(lambda, cd.cycle_types[c]) * mn_character(mu, cd.cycle_types[c]);
  return Rational(sum, cd.group_order);
}

// For every block shape μ ⊢ r and cycle type ρ ⊢ r: the number of
// set-partitions of {1..r} with block sizes μ fixed by a representative
// permutation of type ρ. Built with one pass over all set-partitions.
class FixedPointTable {
 public:
  explicit FixedPointTable(int r) : r_(r) {
    const auto& cd = class_data(r);
    auto shapes = partitions_of(r);
    for (std::size_t s = 0; s < shapes.size(); ++s) shape_index_.emplace(shapes[s], s);
    std::vector<std::vector<int>> perms;
    for (const auto& rho : cd.cycle_types) perms.push_back(representative_permutation(rho));
    counts_.assign(shapes.size(), std::vector<long long>(perms.size(), 0));
    for_each_set_partition(r, [&](const SetPartition& p) {
      auto& row = counts_[shape_index_.at(p.shape())];
      for (std::size_t c = 0; c < perms.size(); ++c)
        if (p.fixed_by(perms[c])) ++row[c];
    });
  }

  int r() const { return r_; }

  long long count(const IntegerPartition& shape, std::size_t class_index) const {
    return counts_.at(shape_index_.at(shape)).at(class_index);
  }

 private:
  int r_;
  std::map<IntegerPartition, std::size_t> shape_index_;
  std::vector<std::vector<long long>> counts_;
};

inline const FixedPointTable& fixed_point_table(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FixedPointTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[r];
  if (!slot) slot = std::make_unique<FixedPointTable>(r);
  return *slot;
}

inline std::size_t class_index(const IntegerPartition& rho) {
  const auto& cd = class_data(rho.size());
  auto it = std::find(cd.cycle_types.begin(), cd.cycle_types.end(), rho);
  return static_cast<std::size_t>(it - cd.cycle_types.begin());
}

// Value at ρ of the permutation character of S_r on set-partitions of
// shape μ, i.e. of the induced module from Stab(Λ_μ).
inline long long stab_perm_character(const IntegerPartition& mu, const IntegerPartition& rho) {
  if (mu.size() != rho.size()) throw SizeMismatch("stab_perm_character: |μ| != |ρ|");
  if (mu.size() == 0) return 1;
  return fixed_point_table(mu.size()).count(mu, class_index(rho));
}

// p_{μ,λ}: multiplicity of S(λ) in the permutation module induced from
// ∏ S_{m_i} ≀ S_{n_i}, where μ = (m_1^{n_1}, ...).
inline long long generalized_plethysm(const IntegerPartition& mu, const IntegerPartition& lambda) {
  if (mu.size() != lambda.size()) throw SizeMismatch("generalized_plethysm: |μ| != |λ|");
  int r = mu.size();
  if (r == 0) return 1;
  const auto& cd = class_data(r);
  const auto& table = fixed_point_table(r);
  BigInt sum = 0;
  for (std::size_t c = 0; c < cd.cycle_types.size(); ++c) {
    long long fixed = table.count(mu, c);
    if (fixed == 0) continue;
    sum += cd.class_sizes[c] * fixed * mn_character(lambda, cd.cycle_types[c]);
  }
  if (sum % cd.group_order != 0 || sum < 0)
    throw InternalFault("generalized_plethysm: non-integral or negative multiplicity");
  return static_cast<long long>(sum / cd.group_order);
}

namespace detail {

using PowerSumPoly = std::map<IntegerPartition, Rational>;

inline IntegerPartition merge_parts(const IntegerPartition& a, const IntegerPartition& b) {
  std::vector<int> parts(a.parts());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return IntegerPartition::from_unsorted(std::move(parts));
}

inline PowerSumPoly multiply(const PowerSumPoly& a, const PowerSumPoly& b) {
  PowerSumPoly out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) out[merge_parts(pa, pb)] += ca * cb;
  return out;
}

// p_k[h_m] = Σ_{ρ ⊢ m} p_{kρ} / z_ρ.
inline PowerSumPoly plethysm_power_into_h(int k, int m) {
  PowerSumPoly out;
  for (const auto& rho : partitions_of(m)) out[rho.scaled(k)] += Rational(1, centralizer_order(rho));
  return out;
}

}  // namespace detail

// ⟨h_n[h_m], s_α⟩ for every α ⊢ mn, computed from power sums alone:
// h_n = Σ_τ p_τ / z_τ, p_k[p_l] = p_{kl}, ⟨p_ν, s_α⟩ = χ^α(ν).
inline const std::map<IntegerPartition, long long>& plethysm_oracle_table(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("plethysm_oracle: m and n must be positive");
  if (static_cast<long long>(m) * n > kDefaultOracleMaxDegree)
    throw ResourceError("plethysm_oracle: mn = " + std::to_string(m * n) + " exceeds oracle cap " +
                        std::to_string(kDefaultOracleMaxDegree));
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::map<IntegerPartition, long long>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({m, n}); it != cache.end()) return *it->second;
  }
  std::map<int, detail::PowerSumPoly> inner;  // p_k[h_m], by k
  detail::PowerSumPoly composite;
  for (const auto& tau : partitions_of(n)) {
    detail::PowerSumPoly term{{IntegerPartition{}, Rational(1, centralizer_order(tau))}};
    for (int k : tau.parts()) {
      auto it = inner.find(k);
      if (it == inner.end()) it = inner.emplace(k, detail::plethysm_power_into_h(k, m)).first;
      term = detail::multiply(term, it->second);
    }
    for (const auto& [nu, c] : term) composite[nu] += c;
  }
  auto table = std::make_unique<std::map<IntegerPartition, long long>>();
  for (const auto& alpha : partitions_of(m * n)) {
    Rational total = 0;
    for (const auto& [nu, c] : composite)
      if (c != 0) total += c * mn_character(alpha, nu);
    if (denominator(total) != 1 || total < 0)
      throw InternalFault("plethysm_oracle: non-integral or negative coefficient");
    (*table)[alpha] = static_cast<long long>(numerator(total));
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(m, n), std::move(table));
  return *it->second;
}

// p_{(m^n),α}: the coefficient of s_α in h_n[h_m].
inline long long plethysm_oracle(int m, int n, const IntegerPartition& alpha) {
  if (alpha.size() != m * n) throw SizeMismatch("plethysm_oracle: |α| != mn");
  return plethysm_oracle_table(m, n).at(alpha);
}

// |P_{m×n}(r)| − |P_{m×n}(r−1)|, the coefficient of s_{(mn−r,r)} in h_n[h_m].
// Requires 2r <= mn so that (mn−r, r) is a partition.
inline long long cayley_sylvester(int m, int n, int r) {
  if (m < 1 || n < 1 || r < 0) throw DomainError("cayley_sylvester: bad arguments");
  if (2LL * r > static_cast<long long>(m) * n)
    throw DomainError("cayley_sylvester: (mn-r, r) is not a partition");
  return count_partitions_in_box(r, m, n) - count_partitions_in_box(r - 1, m, n);
}

}  // namespace foulkes
