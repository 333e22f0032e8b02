#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "foulkes/characters.hpp"
#include "foulkes/diagram.hpp"
#include "foulkes/error.hpp"
#include "foulkes/int_matrix.hpp"
#include "foulkes/scalar.hpp"
#include "foulkes/set_partition.hpp"

namespace foulkes {

// The basis {[Λ, Λ′]} of the diagrammatic stable Foulkes module, in the
// order of enumerate_foulkes_poset: depth-sorted, so each filtration piece
// is a prefix.
class FoulkesModuleBasis {
 public:
  explicit FoulkesModuleBasis(int r) : r_(r), elements_(enumerate_foulkes_poset(r)) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  }

  int r() const { return r_; }
  std::size_t size() const { return elements_.size(); }
  const FoulkesPair& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<FoulkesPair>& elements() const { return elements_; }

  std::optional<std::size_t> find(const FoulkesPair& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const FoulkesPair& p) const {
    auto idx = find(p);
    if (!idx) throw InternalFault("pair " + p.to_string() + " is not a basis element");
    return *idx;
  }

  // Basis indices of depth exactly k.
  std::vector<std::size_t> layer(int k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (depth(elements_[i]) == k) out.push_back(i);
    return out;
  }

 private:
  int r_;
  std::vector<FoulkesPair> elements_;
  std::unordered_map<FoulkesPair, std::size_t> index_;
};

struct ModuleAction {
  unsigned delta1_power = 0;  // t₁, from the inner partition
  unsigned delta2_power = 0;  // t₂, from the outer partition
  FoulkesPair image;

  TwoParamScalar scalar() const { return TwoParamScalar::monomial(delta1_power, delta2_power); }
};

// [Λ, Λ′]·d = δ₁^{t₁} δ₂^{t₂} [Γ, Γ′] where Λ·d = δ₁^{t₁} Γ and Λ′·d = δ₂^{t₂} Γ′
// in the one-row modules Δ(∅).
inline ModuleAction act_diagram(const FoulkesPair& p, const PartitionDiagram& d) {
  if (p.ground_size() != d.size()) throw SizeMismatch("act_diagram: sizes differ");
  auto inner = delta_empty_action(p.inner, d);
  auto outer = delta_empty_action(p.outer, d);
  if (!refines(inner.southern, outer.southern))
    throw InternalFault("act_diagram: image of " + p.to_string() + " under " + d.to_string() + " breaks refinement");
  ModuleAction out;
  out.delta1_power = static_cast<unsigned>(inner.closed_components);
  out.delta2_power = static_cast<unsigned>(outer.closed_components);
  out.image.inner = std::move(inner.southern);
  out.image.outer = std::move(outer.southern);
  return out;
}

// Square matrix over Z[δ₁, δ₂]. Column j holds the image of basis element j.
class ActionMatrix {
 public:
  ActionMatrix() = default;
  explicit ActionMatrix(std::size_t n) : n_(n) {}

  std::size_t dimension() const { return n_; }

  TwoParamScalar at(std::size_t row, std::size_t col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? TwoParamScalar{} : it->second;
  }

  void add(std::size_t row, std::size_t col, const TwoParamScalar& v) {
    if (row >= n_ || col >= n_) throw DomainError("ActionMatrix index out of range");
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.emplace(std::make_pair(row, col), v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  // Nonzero entries keyed by (row, col).
  const std::map<std::pair<std::size_t, std::size_t>, TwoParamScalar>& entries() const { return entries_; }

  ActionMatrix swapped_parameters() const {
    ActionMatrix out(n_);
    for (const auto& [rc, v] : entries_) out.entries_.emplace(rc, v.swapped());
    return out;
  }

  IntMatrix evaluate(std::int64_t d1, std::int64_t d2) const {
    IntMatrix out(n_, n_);
    for (const auto& [rc, v] : entries_) out.set(rc.first, rc.second, v.evaluate(d1, d2));
    return out;
  }

  friend bool operator==(const ActionMatrix&, const ActionMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, TwoParamScalar> entries_;
};

inline ActionMatrix action_matrix(const FoulkesModuleBasis& basis, const PartitionDiagram& d) {
  if (d.size() != basis.r()) throw SizeMismatch("action_matrix: diagram size differs from module rank");
  ActionMatrix out(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto act = act_diagram(basis[j], d);
    out.add(basis.index_of(act.image), j, act.scalar());
  }
  return out;
}

inline ActionMatrix action_matrix(const PartitionDiagram& d, int r) {
  require_within_cap(r, module_matrix_max_r(), "action_matrix");
  return action_matrix(FoulkesModuleBasis(r), d);
}

// Matrix of d on the layer F_k / F_{k−1}: rows and columns are the depth-k
// basis elements; images of smaller depth are dropped.
struct LayerMatrix {
  int depth = 0;
  std::vector<std::size_t> basis_indices;
  ActionMatrix matrix;
};

inline LayerMatrix filtration_layer_matrix(const FoulkesModuleBasis& basis, const PartitionDiagram& d, int k) {
  if (k < 0 || k >= std::max(basis.r(), 1)) throw DomainError("filtration layer index out of range");
  LayerMatrix out;
  out.depth = k;
  out.basis_indices = basis.layer(k);
  std::unordered_map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < out.basis_indices.size(); ++i) local.emplace(out.basis_indices[i], i);
  out.matrix = ActionMatrix(out.basis_indices.size());
  for (std::size_t j = 0; j < out.basis_indices.size(); ++j) {
    auto act = act_diagram(basis[out.basis_indices[j]], d);
    int image_depth = depth(act.image);
    if (image_depth > k) throw InternalFault("filtration: action increased depth");
    if (image_depth < k) continue;
    out.matrix.add(local.at(basis.index_of(act.image)), j, act.scalar());
  }
  return out;
}

// Inner has a non-singleton block, or outer has a singleton block.
inline bool in_depth_radical(const FoulkesPair& p) {
  return p.inner.has_non_singleton_block() || p.outer.has_singleton_block();
}

// Representatives of the depth quotient: (singletons ; Λ′) with Λ′ free of
// singleton blocks, in restricted-growth order of Λ′.
inline std::vector<FoulkesPair> dq_basis(int r) {
  std::vector<FoulkesPair> out;
  auto inner = SetPartition::singletons(r);
  for_each_set_partition(r, [&](const SetPartition& outer) {
    if (!outer.has_singleton_block()) out.emplace_back(inner, outer);
  });
  return out;
}

struct DqOrbit {
  IntegerPartition shape;       // μ ∈ P₁(r)
  FoulkesPair representative;   // (singletons ; Λ_μ)
  std::size_t orbit_size = 0;
};

// S_r-orbits on the depth-quotient basis, found by closing each unvisited
// element under adjacent transpositions. Sorted by shape, lexicographically
// ascending.
inline std::vector<DqOrbit> dq_orbit_decomposition(int r) {
  auto basis = dq_basis(r);
  std::unordered_set<SetPartition> remaining;
  for (const auto& p : basis) remaining.insert(p.outer);
  std::vector<std::vector<int>> swaps;
  for (int i = 0; i + 1 < r; ++i) {
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    swaps.push_back(std::move(perm));
  }
  std::vector<DqOrbit> out;
  auto singletons = SetPartition::singletons(r);
  for (const auto& p : basis) {
    if (!remaining.count(p.outer)) continue;
    std::vector<SetPartition> frontier{p.outer};
    remaining.erase(p.outer);
    std::size_t size = 0;
    while (!frontier.empty()) {
      SetPartition cur = std::move(frontier.back());
      frontier.pop_back();
      ++size;
      for (const auto& sw : swaps) {
        SetPartition next = cur.permuted(sw);
        if (remaining.erase(next)) frontier.push_back(std::move(next));
      }
    }
    DqOrbit orbit;
    orbit.shape = p.outer.shape();
    orbit.representative = FoulkesPair(singletons, SetPartition::consecutive(orbit.shape));
    orbit.orbit_size = size;
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [](const DqOrbit& a, const DqOrbit& b) { return a.shape < b.shape; });
  return out;
}

// Multiplicity of L(λ) in F^r for every |λ| <= r, in the semisimple regime.
// The size-k layer comes from the depth quotient of F^k; F^1 contributes L(∅).
inline std::map<IntegerPartition, long long> decompose_module(int r) {
  if (r < 1) throw DomainError("decompose_module: r must be positive");
  require_within_cap(r, max_r(), "decompose_module");
  std::map<IntegerPartition, long long> out;
  out[IntegerPartition{}] = 1;
  for (int k = 1; k <= r; ++k) {
    auto orbits = dq_orbit_decomposition(k);
    for (const auto& lambda : partitions_of(k)) {
      long long total = 0;
      for (const auto& orbit : orbits) total += generalized_plethysm(orbit.shape, lambda);
      out[lambda] = total;
    }
  }
  return out;
}

// Coordinate dump: one line per nonzero entry, `row col c*d1^a*d2^b`.
inline std::string dump_matrix(const ActionMatrix& m) {
  std::ostringstream os;
  for (const auto& [rc, v] : m.entries()) os << rc.first << ' ' << rc.second << ' ' << v.to_dump_string() << '\n';
  return os.str();
}

}  // namespace foulkes
