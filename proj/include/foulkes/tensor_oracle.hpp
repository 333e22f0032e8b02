#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "foulkes/characters.hpp"
#include "foulkes/diagram.hpp"
#include "foulkes/error.hpp"
#include "foulkes/foulkes_module.hpp"
#include "foulkes/int_matrix.hpp"
#include "foulkes/limits.hpp"
#include "foulkes/set_partition.hpp"

namespace foulkes {

// Coordinates of (C^{mn})^{⊗r}. The basis vector v^{j₁}_{i₁} ⊗ … ⊗ v^{j_r}_{i_r}
// has flat index Σ_k e_k (mn)^{r−1−k} with e_k = (j_k − 1)m + (i_k − 1),
// i.e. v^j_i = e_{(j−1)m+i} read 0-based, first factor most significant.
class TensorSpace {
 public:
  TensorSpace(int m, int n, int r) : m_(m), n_(n), r_(r) {
    if (m < 1 || n < 1 || r < 1) throw DomainError("TensorSpace: m, n, r must be positive");
    long long total = 1;
    for (int k = 0; k < r; ++k) {
      total *= static_cast<long long>(m) * n;
      if (total > kTensorVectorCap)
        throw ResourceError("tensor space (mn)^r exceeds " + std::to_string(kTensorVectorCap));
    }
    dimension_ = static_cast<std::size_t>(total);
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int r() const { return r_; }
  int factor_dimension() const { return m_ * n_; }
  std::size_t dimension() const { return dimension_; }

  // Per-factor 0-based values of a flat index.
  std::vector<int> digits(std::size_t index) const {
    std::vector<int> out(r_);
    for (int k = r_ - 1; k >= 0; --k) {
      out[k] = static_cast<int>(index % factor_dimension());
      index /= factor_dimension();
    }
    return out;
  }

  std::size_t flat(const std::vector<int>& digits) const {
    std::size_t idx = 0;
    for (int d : digits) idx = idx * factor_dimension() + static_cast<std::size_t>(d);
    return idx;
  }

 private:
  int m_, n_, r_;
  std::size_t dimension_ = 0;
};

// v^{j₁}_{i₁} ⊗ … ⊗ v^{j_r}_{i_r}, 1-based subscripts i and superscripts j.
struct TensorBasisIndex {
  std::vector<int> i;
  std::vector<int> j;

  std::size_t flat(const TensorSpace& space) const {
    if (static_cast<int>(i.size()) != space.r() || j.size() != i.size())
      throw SizeMismatch("TensorBasisIndex: length differs from r");
    std::vector<int> d(i.size());
    for (std::size_t k = 0; k < i.size(); ++k) {
      if (i[k] < 1 || i[k] > space.m() || j[k] < 1 || j[k] > space.n())
        throw DomainError("TensorBasisIndex: entry out of range");
      d[k] = (j[k] - 1) * space.m() + (i[k] - 1);
    }
    return space.flat(d);
  }

  static TensorBasisIndex from_flat(const TensorSpace& space, std::size_t index) {
    TensorBasisIndex out;
    for (int d : space.digits(index)) {
      out.i.push_back(d % space.m() + 1);
      out.j.push_back(d / space.m() + 1);
    }
    return out;
  }
};

// Ψ(d): entry (row, col) is 1 iff the northern indices `row` and southern
// indices `col` are constant on every block of d.
inline IntMatrix diagram_tensor_matrix(const PartitionDiagram& d, int m, int n) {
  TensorSpace space(m, n, d.size());
  if (static_cast<long long>(space.dimension()) > kTensorMatrixCap)
    throw ResourceError("diagram_tensor_matrix: (mn)^r exceeds " + std::to_string(kTensorMatrixCap));
  const int r = d.size();
  const int q = space.factor_dimension();
  const int blocks = d.points().block_count();
  long long assignments = 1;
  for (int b = 0; b < blocks; ++b) {
    assignments *= q;
    if (assignments > 4'000'000) throw ResourceError("diagram_tensor_matrix: too many nonzero entries");
  }
  IntMatrix out(space.dimension(), space.dimension());
  std::vector<int> value(blocks, 0);
  std::vector<int> north(r), south(r);
  for (long long a = 0; a < assignments; ++a) {
    long long rest = a;
    for (int b = 0; b < blocks; ++b) {
      value[b] = static_cast<int>(rest % q);
      rest /= q;
    }
    for (int k = 0; k < r; ++k) {
      north[k] = value[d.points().labels()[k]];
      south[k] = value[d.points().labels()[r + k]];
    }
    out.set(space.flat(north), space.flat(south), 1);
  }
  return out;
}

// The image in W_{mn} of (σ₁, …, σ_n; π) ∈ W_m ≀ W_n:
// (j−1)m + i ↦ (π(j)−1)m + σ_{π(j)}(i). All permutations 1-based.
inline std::vector<int> wreath_embed(const std::vector<std::vector<int>>& sigmas, const std::vector<int>& pi) {
  auto check_perm = [](const std::vector<int>& p, const char* what) {
    std::vector<bool> seen(p.size() + 1, false);
    for (int v : p) {
      if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) throw DomainError(std::string(what) + " is not a permutation");
      seen[v] = true;
    }
  };
  const int n = static_cast<int>(pi.size());
  if (static_cast<int>(sigmas.size()) != n) throw SizeMismatch("wreath_embed: need one σ per block");
  check_perm(pi, "π");
  const int m = sigmas.empty() ? 0 : static_cast<int>(sigmas.front().size());
  for (const auto& s : sigmas) {
    if (static_cast<int>(s.size()) != m) throw SizeMismatch("wreath_embed: σ sizes differ");
    check_perm(s, "σ");
  }
  std::vector<int> out(static_cast<std::size_t>(m) * n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= m; ++i) {
      int pj = pi[j - 1];
      out[(j - 1) * m + i - 1] = (pj - 1) * m + sigmas[pj - 1][i - 1];
    }
  return out;
}

// Value-type: k ~ l in the outer partition iff j_k = j_l, and in the inner
// partition iff additionally i_k = i_l.
inline FoulkesPair value_type(const TensorBasisIndex& v) {
  if (v.i.size() != v.j.size() || v.i.empty()) throw SizeMismatch("value_type: malformed index");
  std::vector<int> inner(v.i.size()), outer(v.j.size());
  for (std::size_t k = 0; k < v.i.size(); ++k) {
    outer[k] = v.j[k];
    inner[k] = v.j[k] * 65536 + v.i[k];
  }
  return FoulkesPair(SetPartition::from_labels(inner), SetPartition::from_labels(outer));
}

// Σ of the basis vectors whose subscripts are constant on inner blocks and
// superscripts constant on outer blocks. No distinctness is imposed, so this
// is the sum of the strict orbit sums over all coarsenings of p.
inline std::vector<std::int64_t> phi_bar_vector(const FoulkesPair& p, int m, int n) {
  TensorSpace space(m, n, p.ground_size());
  const int r = p.ground_size();
  const int ib = p.inner.block_count();
  const int ob = p.outer.block_count();
  std::vector<std::int64_t> out(space.dimension(), 0);
  std::vector<int> iv(ib, 0), jv(ob, 0), digits(r);
  while (true) {
    for (int k = 0; k < r; ++k) digits[k] = jv[p.outer.labels()[k]] * m + iv[p.inner.labels()[k]];
    out[space.flat(digits)] += 1;
    // odometer over (iv, jv)
    int pos = 0;
    for (; pos < ib + ob; ++pos) {
      int& slot = pos < ib ? iv[pos] : jv[pos - ib];
      int limit = pos < ib ? m : n;
      if (++slot < limit) break;
      slot = 0;
    }
    if (pos == ib + ob) break;
  }
  return out;
}

// Rank over Q of a list of integer vectors, by fraction-free (Bareiss)
// elimination.
inline std::size_t exact_rank(const std::vector<std::vector<std::int64_t>>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  // Keep only columns that are nonzero somewhere.
  std::vector<std::size_t> live;
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& v : vectors)
      if (v.at(c) != 0) {
        live.push_back(c);
        break;
      }
  std::vector<std::vector<BigInt>> a(vectors.size(), std::vector<BigInt>(live.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t c = 0; c < live.size(); ++c) a[i][c] = vectors[i][live[c]];
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < live.size() && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t c = col + 1; c < live.size(); ++c)
        a[i][c] = (a[rank][col] * a[i][c] - a[i][col] * a[rank][c]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Rank of Θ: the span of φ̄_{(Λ,Λ′)} over all of F^r.
inline std::size_t theta_rank(int r, int m, int n) {
  std::vector<std::vector<std::int64_t>> cols;
  for (const auto& p : enumerate_foulkes_poset(r)) cols.push_back(phi_bar_vector(p, m, n));
  return exact_rank(cols);
}

// Checks Θ(p·w) = Θ(p)·Ψ(w) for every basis element p and the generator
// word w, with δ₁ = m and δ₂ = n.
inline bool verify_theta_homomorphism(int r, int m, int n, const std::vector<Generator>& word) {
  TensorSpace space(m, n, r);
  if (static_cast<long long>(space.dimension()) > kTensorMatrixCap)
    throw ResourceError("verify_theta_homomorphism: (mn)^r exceeds " + std::to_string(kTensorMatrixCap));
  std::vector<PartitionDiagram> diagrams;
  std::vector<IntMatrix> psi;
  for (const auto& g : word) {
    diagrams.push_back(generator(g, r));
    psi.push_back(diagram_tensor_matrix(diagrams.back(), m, n));
  }
  for (const auto& p : enumerate_foulkes_poset(r)) {
    std::vector<std::int64_t> rhs = phi_bar_vector(p, m, n);
    for (const auto& mat : psi) rhs = mat.left_multiply(rhs);
    FoulkesPair cur = p;
    std::int64_t scalar = 1;
    for (const auto& d : diagrams) {
      auto act = act_diagram(cur, d);
      scalar = detail::checked_mul(scalar, act.scalar().evaluate(m, n));
      cur = act.image;
    }
    auto lhs = phi_bar_vector(cur, m, n);
    for (auto& x : lhs) x = detail::checked_mul(x, scalar);
    if (lhs != rhs) return false;
  }
  return true;
}

// Ψ(x)Ψ(y) = (mn)^t Ψ(z) where xy = (δ₁δ₂)^t z, over all pairs of
// (r,r)-diagrams.
inline bool check_psi_multiplicative(int r, int m, int n) {
  auto diagrams = enumerate_diagrams(r);
  std::vector<IntMatrix> psi;
  for (const auto& d : diagrams) psi.push_back(diagram_tensor_matrix(d, m, n));
  for (std::size_t a = 0; a < diagrams.size(); ++a)
    for (std::size_t b = 0; b < diagrams.size(); ++b) {
      auto prod = multiply_diagrams(diagrams[a], diagrams[b]);
      std::size_t c = static_cast<std::size_t>(
          std::lower_bound(diagrams.begin(), diagrams.end(), prod.diagram) - diagrams.begin());
      if (c == diagrams.size() || !(diagrams[c] == prod.diagram)) throw InternalFault("diagram enumeration is not sorted");
      std::int64_t scale = detail::checked_pow(static_cast<std::int64_t>(m) * n, prod.closed_components);
      if (psi[a] * psi[b] != psi[c].scaled(scale)) return false;
    }
  return true;
}

// Generators of W_m ≀ W_n as permutations of {1..mn} (1-based): a
// transposition and an m-cycle in each block, a transposition and an n-cycle
// of the blocks.
inline std::vector<std::vector<int>> wreath_generators(int m, int n) {
  std::vector<int> id_m(m), id_n(n);
  std::iota(id_m.begin(), id_m.end(), 1);
  std::iota(id_n.begin(), id_n.end(), 1);
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> local;
  if (m >= 2) {
    auto t = id_m;
    std::swap(t[0], t[1]);
    local.push_back(t);
    std::vector<int> cyc(m);
    for (int i = 0; i < m; ++i) cyc[i] = (i + 1) % m + 1;
    local.push_back(cyc);
  }
  for (int j = 0; j < n; ++j)
    for (const auto& s : local) {
      std::vector<std::vector<int>> sigmas(n, id_m);
      sigmas[j] = s;
      out.push_back(wreath_embed(sigmas, id_n));
    }
  if (n >= 2) {
    std::vector<std::vector<int>> sigmas(n, id_m);
    auto t = id_n;
    std::swap(t[0], t[1]);
    out.push_back(wreath_embed(sigmas, t));
    std::vector<int> cyc(n);
    for (int j = 0; j < n; ++j) cyc[j] = (j + 1) % n + 1;
    out.push_back(wreath_embed(sigmas, cyc));
  }
  return out;
}

// Every value-type fibre of the tensor basis is exactly one W_m ≀ W_n orbit.
inline bool check_orbits_are_value_types(int m, int n, int r) {
  TensorSpace space(m, n, r);
  auto gens = wreath_generators(m, n);
  const std::size_t total = space.dimension();
  std::vector<long long> orbit(total, -1);
  long long orbits = 0;
  for (std::size_t start = 0; start < total; ++start) {
    if (orbit[start] != -1) continue;
    std::vector<std::size_t> stack{start};
    orbit[start] = orbits;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      auto digits = space.digits(cur);
      for (const auto& g : gens) {
        std::vector<int> moved(digits.size());
        for (std::size_t k = 0; k < digits.size(); ++k) moved[k] = g[digits[k]] - 1;
        std::size_t next = space.flat(moved);
        if (orbit[next] == -1) {
          orbit[next] = orbits;
          stack.push_back(next);
        }
      }
    }
    ++orbits;
  }
  // Orbit label and value-type must determine each other.
  std::map<long long, FoulkesPair> type_of_orbit;
  std::map<FoulkesPair, long long> orbit_of_type;
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto vt = value_type(TensorBasisIndex::from_flat(space, idx));
    if (!in_truncated_poset(vt, m, n)) return false;
    auto [it1, new1] = type_of_orbit.emplace(orbit[idx], vt);
    if (!new1 && !(it1->second == vt)) return false;
    auto [it2, new2] = orbit_of_type.emplace(vt, orbit[idx]);
    if (!new2 && it2->second != orbit[idx]) return false;
  }
  return true;
}

// Multiplicity of the trivial W_{mn}-module in the image of Θ: the
// dimension of image ∩ (tensor space)^{W_{mn}} divided by the dimension of
// the invariants. Throws InternalFault if the quotient is not integral.
inline long long trivial_isotypic_multiplicity(int r, int m, int n) {
  TensorSpace space(m, n, r);
  std::vector<std::vector<std::int64_t>> image;
  for (const auto& p : enumerate_foulkes_poset(r)) image.push_back(phi_bar_vector(p, m, n));
  // W_{mn}-invariants: sums over index tuples with a fixed equality pattern.
  std::map<SetPartition, std::vector<std::int64_t>> invariants;
  for (std::size_t idx = 0; idx < space.dimension(); ++idx) {
    auto digits = space.digits(idx);
    auto pattern = SetPartition::from_labels(digits);
    auto [it, inserted] = invariants.try_emplace(pattern, std::vector<std::int64_t>(space.dimension(), 0));
    it->second[idx] = 1;
  }
  std::vector<std::vector<std::int64_t>> inv;
  for (auto& [pattern, v] : invariants) inv.push_back(std::move(v));
  std::size_t rank_image = exact_rank(image);
  std::size_t rank_inv = exact_rank(inv);
  auto both = image;
  both.insert(both.end(), inv.begin(), inv.end());
  std::size_t rank_both = exact_rank(both);
  std::size_t intersection = rank_image + rank_inv - rank_both;
  if (rank_inv == 0 || intersection % rank_inv != 0)
    throw InternalFault("trivial_isotypic_multiplicity: non-integral multiplicity");
  return static_cast<long long>(intersection / rank_inv);
}

}  // namespace foulkes
