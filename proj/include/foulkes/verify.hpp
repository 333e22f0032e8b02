#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "foulkes/characters.hpp"
#include "foulkes/diagram.hpp"
#include "foulkes/error.hpp"
#include "foulkes/foulkes_module.hpp"
#include "foulkes/plethysm.hpp"
#include "foulkes/set_partition.hpp"
#include "foulkes/tensor_oracle.hpp"

namespace foulkes {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Suite { fast, full };

inline Suite parse_suite(std::string_view s) {
  if (s == "fast") return Suite::fast;
  if (s == "full") return Suite::full;
  throw ParseError("unknown suite '" + std::string(s) + "'");
}

struct SuiteBounds {
  int max_r;        // module and algebra checks
  int max_mn;       // tensor and oracle checks
  int max_char_r;   // character tables
  int max_sharp_r;
  int max_weintraub;
};

inline SuiteBounds bounds_for(Suite s) {
  if (s == Suite::fast) return {4, 9, 6, 8, 8};
  return {6, 16, 8, 10, 10};
}

namespace checks {

inline CheckResult poset_double_count(int max_r) {
  for (int r = 1; r <= max_r + 2; ++r) {
    long long expected = 0;
    for_each_set_partition(r, [&](const SetPartition& outer) {
      long long prod = 1;
      for (int b : outer.block_sizes()) prod *= bell_number(b);
      expected += prod;
    });
    auto poset = enumerate_foulkes_poset(r);
    if (static_cast<long long>(poset.size()) != expected)
      return {"poset double count", false, "r=" + std::to_string(r)};
    if (static_cast<long long>(enumerate_set_partitions(r).size()) != bell_number(r))
      return {"poset double count", false, "Bell mismatch at r=" + std::to_string(r)};
  }
  return {"poset double count", true, "r <= " + std::to_string(max_r + 2)};
}

inline CheckResult refinement_partial_order(int max_r) {
  for (int r = 1; r <= max_r; ++r) {
    auto all = enumerate_set_partitions(r);
    for (const auto& a : all) {
      if (canonicalize(a.blocks(), r) != a) return {"refinement order", false, "canonicalize not idempotent"};
      if (!refines(a, a)) return {"refinement order", false, "not reflexive"};
      for (const auto& b : all) {
        bool ab = refines(a, b);
        if (ab && refines(b, a) && a != b) return {"refinement order", false, "not antisymmetric"};
        if (!ab) continue;
        for (const auto& c : all)
          if (refines(b, c) && !refines(a, c)) return {"refinement order", false, "not transitive"};
      }
    }
  }
  return {"refinement order", true, "r <= " + std::to_string(max_r)};
}

inline PartitionDiagram random_diagram(int r, std::mt19937& rng) {
  std::vector<int> labels(2 * r);
  std::uniform_int_distribution<int> pick(0, 2 * r - 1);
  for (auto& l : labels) l = pick(rng);
  return PartitionDiagram(SetPartition::from_labels(labels));
}

inline CheckResult diagram_associativity(int max_r, int samples) {
  std::mt19937 rng(20240611);
  for (int s = 0; s < samples; ++s) {
    int r = 1 + s % std::min(max_r, 4);
    auto x = random_diagram(r, rng), y = random_diagram(r, rng), z = random_diagram(r, rng);
    AlgebraElement ex(x), ey(y), ez(z);
    if ((ex * ey) * ez != ex * (ey * ez))
      return {"diagram associativity", false, x.to_string() + " " + y.to_string() + " " + z.to_string()};
    auto xy = multiply_diagrams(x, y);
    if (xy.diagram.propagating_count() > std::min(x.propagating_count(), y.propagating_count()))
      return {"diagram associativity", false, "propagating count increased"};
  }
  return {"diagram associativity", true, std::to_string(samples) + " random triples"};
}

inline CheckResult ideal_filtration(int max_r) {
  for (int r = 1; r <= max_r; ++r) {
    auto all = enumerate_diagrams(r);
    for (const auto& x : all) {
      if (x.propagating_count() == r) continue;
      for (const auto& y : all)
        if (multiply_diagrams(x, y).diagram.propagating_count() >= r ||
            multiply_diagrams(y, x).diagram.propagating_count() >= r)
          return {"ideal filtration", false, "r=" + std::to_string(r)};
    }
  }
  return {"ideal filtration", true, "r <= " + std::to_string(max_r)};
}

// y ↦ {1} ∪ {1̄} ∪ (y shifted by one).
inline PartitionDiagram pad_with_p1(const PartitionDiagram& y) {
  int r = y.size() + 1;
  std::vector<int> labels(2 * r);
  labels[0] = 1000;
  labels[r] = 1001;
  for (int k = 0; k < r - 1; ++k) {
    labels[1 + k] = y.points().labels()[k];
    labels[r + 1 + k] = y.points().labels()[r - 1 + k];
  }
  return PartitionDiagram(SetPartition::from_labels(labels));
}

// p₁ P_r p₁ has the diagrams {1},{1̄} ∪ y for y ∈ P_{r−1}, and their products
// match P_{r−1} with one extra closed component.
inline CheckResult truncation_isomorphism(int max_r) {
  for (int r = 2; r <= max_r; ++r) {
    auto small = enumerate_diagrams(r - 1);
    for (const auto& y : small)
      for (const auto& z : small) {
        auto lhs = multiply_diagrams(pad_with_p1(y), pad_with_p1(z));
        auto rhs = multiply_diagrams(y, z);
        if (lhs.closed_components != rhs.closed_components + 1 || lhs.diagram != pad_with_p1(rhs.diagram))
          return {"truncation isomorphism", false, "r=" + std::to_string(r)};
      }
    auto p1 = generator(GeneratorKind::p1, r);
    std::set<PartitionDiagram> image, padded;
    for (const auto& x : enumerate_diagrams(r))
      image.insert(multiply_diagrams(multiply_diagrams(p1, x).diagram, p1).diagram);
    for (const auto& y : small) padded.insert(pad_with_p1(y));
    if (image != padded) return {"truncation isomorphism", false, "p1 P p1 basis at r=" + std::to_string(r)};
  }
  return {"truncation isomorphism", true, "2 <= r <= " + std::to_string(max_r)};
}

inline CheckResult r2_matrices() {
  FoulkesModuleBasis basis(2);
  auto d12 = TwoParamScalar::monomial(1, 1);
  auto d1 = TwoParamScalar::monomial(1, 0);
  std::vector<std::vector<TwoParamScalar>> p1 = {{0, 0, 0}, {1, d12, d1}, {0, 0, 0}};
  std::vector<std::vector<TwoParamScalar>> p12 = {{1, 1, 1}, {0, 0, 0}, {0, 0, 0}};
  std::vector<std::vector<TwoParamScalar>> s1 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto matches = [&](const PartitionDiagram& d, const std::vector<std::vector<TwoParamScalar>>& want) {
    auto m = action_matrix(basis, d);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (!(m.at(i, j) == want[i][j])) return false;
    return true;
  };
  bool ok = matches(generator(GeneratorKind::p1, 2), p1) && matches(generator(GeneratorKind::p12, 2), p12) &&
            matches(generator(GeneratorKind::s, 2, 1), s1);
  return {"r=2 generator matrices", ok, ok ? "p1, p12, s1" : "mismatch"};
}

inline CheckResult module_homomorphism(int max_r, int samples) {
  std::mt19937 rng(7);
  for (int r = 1; r <= std::min(max_r, 5); ++r) {
    FoulkesModuleBasis basis(r);
    auto gens = generators_for(r);
    std::vector<IntMatrix> mats;
    for (const auto& g : gens) mats.push_back(action_matrix(basis, generator(g, r)).evaluate(5, 7));
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(1, 5);
    for (int s = 0; s < samples; ++s) {
      int l = len(rng);
      IntMatrix acc = IntMatrix::identity(basis.size());
      PartitionDiagram word = PartitionDiagram::identity(r);
      int t = 0;
      for (int k = 0; k < l; ++k) {
        std::size_t g = pick(rng);
        acc = mats[g] * acc;
        auto prod = multiply_diagrams(word, generator(gens[g], r));
        t += prod.closed_components;
        word = prod.diagram;
      }
      auto want = action_matrix(basis, word).evaluate(5, 7).scaled(detail::checked_pow(35, t));
      if (acc != want) return {"module homomorphism", false, "r=" + std::to_string(r)};
    }
  }
  return {"module homomorphism", true, "random words of length <= 5 at (5,7)"};
}

// Depth drops by 0 or 1 under each generator, and each column of a generator
// matrix has exactly one nonzero entry.
inline CheckResult depth_monotone(int max_r) {
  for (int r = 1; r <= max_r; ++r) {
    FoulkesModuleBasis basis(r);
    for (const auto& g : generators_for(r)) {
      auto d = generator(g, r);
      for (const auto& p : basis.elements()) {
        int drop = depth(p) - depth(act_diagram(p, d).image);
        if (drop != 0 && drop != 1) return {"depth monotone", false, p.to_string() + " under " + g.name()};
      }
      auto m = action_matrix(basis, d);
      std::vector<int> per_col(basis.size(), 0);
      for (const auto& [rc, v] : m.entries()) ++per_col[rc.second];
      if (std::any_of(per_col.begin(), per_col.end(), [](int c) { return c != 1; }))
        return {"depth monotone", false, "column without a single image"};
    }
  }
  return {"depth monotone", true, "r <= " + std::to_string(max_r)};
}

inline bool is_layer_entry(const TwoParamScalar& v) {
  return v.is_zero() || v == TwoParamScalar(1) || v == TwoParamScalar::monomial(1, 1);
}

inline CheckResult filtration_layers(int max_r) {
  for (int r = 1; r <= max_r; ++r) {
    FoulkesModuleBasis basis(r);
    for (const auto& g : generators_for(r)) {
      auto d = generator(g, r);
      for (int k = 0; k < std::max(r, 1); ++k) {
        auto layer = filtration_layer_matrix(basis, d, k);
        for (const auto& [rc, v] : layer.matrix.entries())
          if (!is_layer_entry(v))
            return {"filtration layers", false, "entry " + v.to_string() + " at r=" + std::to_string(r)};
        if (!(layer.matrix == layer.matrix.swapped_parameters()))
          return {"filtration layers", false, "parameter swap at r=" + std::to_string(r)};
      }
    }
  }
  return {"filtration layers", true, "r <= " + std::to_string(max_r)};
}

inline CheckResult depth_radical_closure(int max_r) {
  for (int r = 1; r <= max_r; ++r) {
    FoulkesModuleBasis basis(r);
    for (const auto& g : generators_for(r)) {
      auto d = generator(g, r);
      for (const auto& p : basis.elements())
        if (in_depth_radical(p) && !in_depth_radical(act_diagram(p, d).image))
          return {"depth radical closure", false, p.to_string() + " under " + g.name()};
    }
  }
  return {"depth radical closure", true, "r <= " + std::to_string(max_r)};
}

// DQ·p₁ ⊆ DR; DR·p₁ is exactly the pairs with {1} a block of both
// coordinates, which correspond to F^{r−1}.
inline CheckResult truncation_of_module(int max_r) {
  for (int r = 1; r <= max_r; ++r) {
    auto p1 = generator(GeneratorKind::p1, r);
    std::set<FoulkesPair> image;
    for (const auto& p : enumerate_foulkes_poset(r)) {
      auto q = act_diagram(p, p1).image;
      if (!in_depth_radical(p)) {
        if (!in_depth_radical(q)) return {"module truncation", false, "DQ not killed by p1"};
        continue;
      }
      image.insert(q);
    }
    std::set<FoulkesPair> target;
    for (const auto& p : enumerate_foulkes_poset(r))
      if (p.outer.block_sizes()[0] == 1)
        target.insert(p);
    std::size_t smaller = r == 1 ? 1 : enumerate_foulkes_poset(r - 1).size();
    if (image != target || target.size() != smaller)
      return {"module truncation", false, "r=" + std::to_string(r)};
  }
  return {"module truncation", true, "r <= " + std::to_string(max_r)};
}

inline CheckResult dq_orbits(int max_r) {
  for (int r = 1; r <= max_r; ++r) {
    auto orbits = dq_orbit_decomposition(r);
    std::size_t total = 0;
    std::vector<IntegerPartition> shapes;
    for (const auto& o : orbits) {
      total += o.orbit_size;
      shapes.push_back(o.shape);
    }
    auto want = partitions_no_ones(r);
    std::sort(want.begin(), want.end());
    if (total != dq_basis(r).size() || shapes != want) return {"dq orbits", false, "r=" + std::to_string(r)};
  }
  return {"dq orbits", true, "r <= " + std::to_string(max_r)};
}

inline CheckResult module_matches_stable_formula(int max_r) {
  for (int r = 1; r <= max_r; ++r) {
    auto dec = decompose_module(r);
    for (int k = 0; k <= r; ++k)
      for (const auto& lambda : partitions_of(k)) {
        long long want = k == 0 ? 1 : stable_plethysm(lambda);
        if (dec[lambda] != want) return {"module decomposition", false, lambda.to_string()};
      }
    long long weighted = 0;
    for (const auto& e : stable_table(r)) weighted += e.value * character_degree(e.lambda);
    if (weighted != static_cast<long long>(dq_basis(r).size()))
      return {"module decomposition", false, "weighted dimension at r=" + std::to_string(r)};
  }
  return {"module decomposition", true, "r <= " + std::to_string(max_r)};
}

inline CheckResult character_orthogonality(int max_r) {
  for (int r = 1; r <= max_r; ++r) {
    auto parts = partitions_of(r);
    for (const auto& a : parts)
      for (const auto& b : parts)
        if (character_inner_product(a, b) != Rational(a == b ? 1 : 0))
          return {"character orthogonality", false, a.to_string() + " " + b.to_string()};
  }
  return {"character orthogonality", true, "r <= " + std::to_string(max_r)};
}

inline CheckResult permutation_module_dimension(int max_r) {
  for (int r = 1; r <= max_r; ++r) {
    std::map<IntegerPartition, long long> shape_count;
    for_each_set_partition(r, [&](const SetPartition& p) { ++shape_count[p.shape()]; });
    auto identity_class = class_index(IntegerPartition(std::vector<int>(r, 1)));
    for (const auto& mu : partitions_of(r)) {
      long long dim = 0;
      for (const auto& lambda : partitions_of(r)) dim += generalized_plethysm(mu, lambda) * character_degree(lambda);
      if (dim != shape_count[mu] || fixed_point_table(r).count(mu, identity_class) != shape_count[mu])
        return {"permutation module dimension", false, mu.to_string()};
    }
  }
  return {"permutation module dimension", true, "r <= " + std::to_string(max_r)};
}

inline CheckResult oracle_agreement(int max_mn) {
  std::vector<std::pair<int, int>> cases;
  if (max_mn >= 9) cases.push_back({3, 3});
  if (max_mn >= 16) cases.push_back({4, 4});
  for (auto [m, n] : cases) {
    for (int k = 0; k <= std::min(m, n); ++k)
      for (const auto& lambda : partitions_of(k)) {
        long long stable = k == 0 ? 1 : stable_plethysm(lambda);
        if (plethysm_oracle(m, n, pad_partition(lambda, m * n)) != stable)
          return {"oracle agreement", false, lambda.to_string() + " at (" + std::to_string(m) + "," + std::to_string(n) + ")"};
      }
  }
  return {"oracle agreement", true, std::to_string(cases.size()) + " (m,n) pairs"};
}

// Two-row consistency and monotone stabilization across every admissible
// (m, n) with mn within range.
inline CheckResult stabilization(int max_mn) {
  for (int m = 1; m <= max_mn; ++m)
    for (int n = 1; m * n <= max_mn; ++n) {
      int top = std::min(m, n);
      for (int k = 1; k <= top; ++k) {
        if (2 * k <= m * n && cayley_sylvester(m, n, k) != stable_plethysm(IntegerPartition{k}))
          return {"stabilization", false, "two-row (" + std::to_string(m) + "," + std::to_string(n) + ")"};
        for (const auto& lambda : partitions_of(k))
          if (m * n >= k + lambda.first() &&
              plethysm_oracle(m, n, pad_partition(lambda, m * n)) != stable_plethysm(lambda))
            return {"stabilization", false, lambda.to_string()};
      }
    }
  return {"stabilization", true, "mn <= " + std::to_string(max_mn)};
}

inline CheckResult sharpness(int max_r) {
  for (int r = 3; r <= max_r; ++r)
    if (!sharpness_check(r).ok) return {"sharpness", false, "r=" + std::to_string(r)};
  return {"sharpness", true, "3 <= r <= " + std::to_string(max_r)};
}

inline CheckResult weintraub(int max_size) {
  for (int k = 2; k <= max_size; k += 2)
    for (const auto& lambda : partitions_of(k))
      if (lambda.is_even() && !weintraub_check(lambda)) return {"weintraub", false, lambda.to_string()};
  return {"weintraub", true, "|lambda| <= " + std::to_string(max_size)};
}

inline CheckResult psi_multiplicative() {
  for (int r = 1; r <= 2; ++r)
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; m * n <= 4; ++n)
        if (!check_psi_multiplicative(r, m, n))
          return {"tensor action multiplicative", false, std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(n)};
  return {"tensor action multiplicative", true, "r <= 2, mn <= 4"};
}

inline CheckResult wreath_orbits(int max_mn) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3 && m * n <= max_mn; ++n)
      for (int r = 1; r <= 3; ++r)
        if (!check_orbits_are_value_types(m, n, r))
          return {"wreath orbits", false, std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r)};
  return {"wreath orbits", true, "m, n, r <= 3"};
}

inline CheckResult theta_injectivity(int max_mn) {
  for (int r = 1; r <= 3; ++r)
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) {
        if (m * n > max_mn) continue;
        std::size_t full = enumerate_foulkes_poset(r).size();
        std::size_t truncated = 0;
        for (const auto& p : enumerate_foulkes_poset(r)) truncated += in_truncated_poset(p, m, n);
        std::size_t rank = theta_rank(r, m, n);
        if ((rank == full) != (m >= r && n >= r) || rank != truncated)
          return {"theta injectivity", false, std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(n)};
      }
  return {"theta injectivity", true, "r <= 3, m,n <= 4, mn <= " + std::to_string(max_mn)};
}

inline CheckResult theta_homomorphism(int max_mn) {
  for (int r = 1; r <= 3; ++r)
    for (int m = 1; m <= max_mn; ++m)
      for (int n = 1; m * n <= std::min(max_mn, 9); ++n)
        for (const auto& g : generators_for(r))
          if (!verify_theta_homomorphism(r, m, n, {g}))
            return {"theta homomorphism", false, g.name() + " at " + std::to_string(m) + "," + std::to_string(n)};
  if (!verify_theta_homomorphism(3, 3, 3, {{GeneratorKind::p12, 0}, {GeneratorKind::s, 2}, {GeneratorKind::p1, 0}}))
    return {"theta homomorphism", false, "word p12 s2 p1"};
  return {"theta homomorphism", true, "r <= 3, mn <= 9"};
}

inline CheckResult trivial_isotypic() {
  long long got = trivial_isotypic_multiplicity(2, 2, 2);
  long long want = plethysm_oracle(2, 2, IntegerPartition{4});
  return {"trivial isotypic spot check", got == want, std::to_string(got) + " vs " + std::to_string(want)};
}

}  // namespace checks

// Runs every invariant check for the given suite, in a fixed order. With
// inject_failure set, a deliberately false check is appended.
inline std::vector<CheckResult> run_verification(Suite suite, bool inject_failure = false) {
  auto b = bounds_for(suite);
  std::vector<std::pair<const char*, std::function<CheckResult()>>> jobs = {
      {"poset double count", [&] { return checks::poset_double_count(b.max_r); }},
      {"refinement order", [&] { return checks::refinement_partial_order(std::min(b.max_r, 5)); }},
      {"diagram associativity", [&] { return checks::diagram_associativity(b.max_r, 200); }},
      {"ideal filtration", [] { return checks::ideal_filtration(3); }},
      {"truncation isomorphism", [] { return checks::truncation_isomorphism(3); }},
      {"r=2 generator matrices", [] { return checks::r2_matrices(); }},
      {"module homomorphism", [&] { return checks::module_homomorphism(b.max_r, 20); }},
      {"depth monotone", [&] { return checks::depth_monotone(b.max_r); }},
      {"filtration layers", [&] { return checks::filtration_layers(std::min(b.max_r, 5)); }},
      {"depth radical closure", [&] { return checks::depth_radical_closure(std::min(b.max_r, 5)); }},
      {"module truncation", [] { return checks::truncation_of_module(4); }},
      {"dq orbits", [&] { return checks::dq_orbits(b.max_r + 2); }},
      {"module decomposition", [&] { return checks::module_matches_stable_formula(b.max_r); }},
      {"character orthogonality", [&] { return checks::character_orthogonality(b.max_char_r); }},
      {"permutation module dimension", [&] { return checks::permutation_module_dimension(b.max_char_r); }},
      {"oracle agreement", [&] { return checks::oracle_agreement(b.max_mn); }},
      {"stabilization", [&] { return checks::stabilization(b.max_mn); }},
      {"sharpness", [&] { return checks::sharpness(b.max_sharp_r); }},
      {"weintraub", [&] { return checks::weintraub(b.max_weintraub); }},
      {"tensor action multiplicative", [] { return checks::psi_multiplicative(); }},
      {"wreath orbits", [&] { return checks::wreath_orbits(b.max_mn); }},
      {"theta injectivity", [&] { return checks::theta_injectivity(b.max_mn); }},
      {"theta homomorphism", [&] { return checks::theta_homomorphism(b.max_mn); }},
      {"trivial isotypic spot check", [] { return checks::trivial_isotypic(); }},
  };
  std::vector<CheckResult> out;
  for (auto& [name, job] : jobs) {
    try {
      out.push_back(job());
    } catch (const Error& e) {
      out.push_back({name, false, std::string("threw: ") + e.what()});
    }
  }
  if (inject_failure) out.push_back({"injected failure", false, "requested"});
  return out;
}

}  // namespace foulkes
