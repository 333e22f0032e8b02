#pragma once

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "foulkes/characters.hpp"
#include "foulkes/error.hpp"
#include "foulkes/integer_partition.hpp"
#include "foulkes/limits.hpp"

namespace foulkes {

// p̄_{∞,λ} = Σ_{μ ∈ P₁(|λ|)} p_{μ,λ}: the common value of p_{(m^n),λ_[mn]}
// for all m, n >= |λ|.
inline long long stable_plethysm(const IntegerPartition& lambda) {
  int r = lambda.size();
  require_within_cap(r, max_r(), "stable_plethysm");
  static std::mutex mu;
  static std::map<IntegerPartition, long long> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  long long total = 0;
  for (const auto& shape : partitions_no_ones(r)) total += generalized_plethysm(shape, lambda);
  std::lock_guard lock(mu);
  cache.emplace(lambda, total);
  return total;
}

enum class Regime { stable, oracle };

inline const char* regime_name(Regime r) { return r == Regime::stable ? "stable" : "oracle"; }

struct CoefficientResult {
  long long value = 0;
  Regime regime = Regime::stable;
  IntegerPartition padded;  // λ_[mn]
};

// p_{(m^n),λ_[mn]}. Uses the stable formula when m, n >= |λ| and the
// power-sum oracle when mn is within the oracle cap; anything else is
// rejected with UnsupportedRegime, as is a λ too long to pad to mn.
inline CoefficientResult plethysm_coefficient(int m, int n, const IntegerPartition& lambda) {
  if (m < 1 || n < 1) throw DomainError("plethysm_coefficient: m and n must be positive");
  long long total = static_cast<long long>(m) * n;
  if (total > 1'000'000'000LL) throw DomainError("plethysm_coefficient: mn too large");
  CoefficientResult out;
  int r = lambda.size();
  if (total < r + (lambda.empty() ? 0 : lambda.first()))
    throw UnsupportedRegime("lambda_[" + std::to_string(total) + "] is not a partition for lambda = " +
                            lambda.to_string());
  out.padded = pad_partition(lambda, static_cast<int>(total));
  if (m >= r && n >= r) {
    out.regime = Regime::stable;
    out.value = stable_plethysm(lambda);
  } else if (total <= kDefaultOracleMaxDegree) {
    out.regime = Regime::oracle;
    out.value = plethysm_oracle(m, n, out.padded);
  } else {
    throw UnsupportedRegime("p_{(" + std::to_string(m) + "^" + std::to_string(n) + ")," + out.padded.to_string() +
                            "} needs m,n >= |lambda| = " + std::to_string(r) + " or mn <= " +
                            std::to_string(kDefaultOracleMaxDegree));
  }
  return out;
}

struct StableTableEntry {
  IntegerPartition lambda;
  long long value = 0;
};

// p̄_{∞,λ} for every λ ⊢ r, in reverse-lexicographic order.
inline std::vector<StableTableEntry> stable_table(int r) {
  if (r < 0) throw DomainError("stable_table: r must be nonnegative");
  require_within_cap(r, max_r(), "stable_table");
  std::vector<StableTableEntry> out;
  for (const auto& lambda : partitions_of(r)) out.push_back({lambda, stable_plethysm(lambda)});
  return out;
}

struct FoulkesReport {
  IntegerPartition lambda;
  std::array<int, 4> params{};  // m, n, p, q
  std::array<long long, 4> values{};  // p_{(m^n)}, p_{(n^m)}, p_{(p^q)}, p_{(q^p)}
  long long stable_value = 0;
  bool all_equal = false;
};

// Evaluates the Foulkes pair p_{(m^n)}, p_{(n^m)} and the strengthened pair
// p_{(p^q)}, p_{(q^p)} at λ, each through plethysm_coefficient.
inline FoulkesReport foulkes_equalities(const IntegerPartition& lambda, int m, int n, int p, int q) {
  int r = lambda.size();
  if (m < r || n < r || p < r || q < r)
    throw DomainError("foulkes_equalities: every parameter must be at least |lambda|");
  FoulkesReport rep;
  rep.lambda = lambda;
  rep.params = {m, n, p, q};
  rep.values = {plethysm_coefficient(m, n, lambda).value, plethysm_coefficient(n, m, lambda).value,
                plethysm_coefficient(p, q, lambda).value, plethysm_coefficient(q, p, lambda).value};
  rep.stable_value = stable_plethysm(lambda);
  rep.all_equal = true;
  for (long long v : rep.values) rep.all_equal = rep.all_equal && v == rep.stable_value;
  return rep;
}

// p̄_{∞,λ} > 0 for an even partition λ.
inline bool weintraub_check(const IntegerPartition& lambda) {
  if (!lambda.is_even()) throw DomainError("weintraub_check: " + lambda.to_string() + " has an odd part");
  return stable_plethysm(lambda) > 0;
}

struct SharpnessReport {
  int r = 0;
  long long stable_value = 0;       // p̄_{∞,(r)}
  long long no_ones_count = 0;      // |P₁(r)|
  long long below_threshold = 0;    // p_{(r^{r−1}),(r²−2r,r)} by Cayley–Sylvester
  bool ok = false;
};

inline SharpnessReport sharpness_check(int r) {
  if (r < 3) throw DomainError("sharpness_check: r must be at least 3");
  SharpnessReport rep;
  rep.r = r;
  rep.stable_value = stable_plethysm(IntegerPartition{r});
  rep.no_ones_count = static_cast<long long>(partitions_no_ones(r).size());
  rep.below_threshold = cayley_sylvester(r, r - 1, r);
  rep.ok = rep.stable_value == rep.no_ones_count && rep.below_threshold == rep.no_ones_count - 1;
  return rep;
}

}  // namespace foulkes
