#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "foulkes/error.hpp"
#include "foulkes/limits.hpp"
#include "foulkes/scalar.hpp"
#include "foulkes/set_partition.hpp"

namespace foulkes {

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// An (r,r)-partition diagram: a set-partition of {1..r, 1̄..r̄}. Internally
// point k < r is the northern vertex k+1 and point r+k the southern vertex
// (k+1)̄, which realises the total order 1 < … < r < 1̄ < … < r̄.
class PartitionDiagram {
 public:
  PartitionDiagram() = default;
  explicit PartitionDiagram(SetPartition points) : points_(std::move(points)) {
    if (points_.ground_size() % 2 != 0) throw SizeMismatch("diagram needs an even number of points");
  }

  static PartitionDiagram identity(int r) {
    std::vector<int> labels(2 * r);
    for (int k = 0; k < r; ++k) labels[k] = labels[r + k] = k;
    return PartitionDiagram(SetPartition::from_labels(labels));
  }

  // Blocks given as northern (positive) and southern (negative) 1-based points.
  static PartitionDiagram from_blocks(const std::vector<std::vector<int>>& blocks, int r) {
    std::vector<std::vector<int>> shifted;
    for (const auto& b : blocks) {
      std::vector<int> s;
      for (int v : b) s.push_back(v > 0 ? v : r - v);
      shifted.push_back(std::move(s));
    }
    return PartitionDiagram(canonicalize(shifted, 2 * r));
  }

  int size() const { return points_.ground_size() / 2; }
  const SetPartition& points() const { return points_; }

  // Block label of the northern vertex k or southern vertex k̄ (1-based).
  int north_block(int k) const { return points_.labels()[k - 1]; }
  int south_block(int k) const { return points_.labels()[size() + k - 1]; }

  int propagating_count() const {
    int r = size();
    std::vector<unsigned char> seen(points_.block_count(), 0);
    for (int k = 0; k < r; ++k) seen[points_.labels()[k]] |= 1;
    for (int k = 0; k < r; ++k) seen[points_.labels()[r + k]] |= 2;
    int count = 0;
    for (auto s : seen) count += s == 3 ? 1 : 0;
    return count;
  }

  // Text form over tokens 1..r and 1'..r', e.g. `{1,2,1',2'|3,3'}`.
  std::string to_string() const {
    int r = size();
    std::string out = "{";
    auto bs = points_.blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      if (b) out += '|';
      for (std::size_t i = 0; i < bs[b].size(); ++i) {
        if (i) out += ',';
        int v = bs[b][i];
        out += v <= r ? std::to_string(v) : std::to_string(v - r) + "'";
      }
    }
    return out + "}";
  }

  friend auto operator<=>(const PartitionDiagram&, const PartitionDiagram&) = default;
  friend bool operator==(const PartitionDiagram&, const PartitionDiagram&) = default;

 private:
  SetPartition points_;
};

// Parses `{1,2,1',2'|3,3'}`. The size is the largest index that appears.
inline PartitionDiagram parse_diagram(std::string_view text) {
  auto blocks = detail::parse_blocks(text, [](const std::string& tok) {
    bool south = !tok.empty() && tok.back() == '\'';
    int v = detail::parse_index(south ? tok.substr(0, tok.size() - 1) : tok);
    if (v == 0) throw ParseError("diagram vertices are numbered from 1");
    return south ? -v : v;
  });
  int r = 0;
  for (const auto& b : blocks)
    for (int v : b) r = std::max(r, v < 0 ? -v : v);
  return PartitionDiagram::from_blocks(blocks, r);
}

struct DiagramProduct {
  int closed_components = 0;  // t: the algebra product is (δ₁δ₂)^t · diagram
  PartitionDiagram diagram;
};

// Concatenates x above y. Nodes 0..r-1 are x's north, r..2r-1 the middle row,
// 2r..3r-1 y's south; a component is closed when it has only middle nodes.
inline DiagramProduct multiply_diagrams(const PartitionDiagram& x, const PartitionDiagram& y) {
  int r = x.size();
  if (y.size() != r) throw SizeMismatch("multiply_diagrams: sizes differ");
  detail::UnionFind uf(3 * r);
  auto join_blocks = [&](const PartitionDiagram& d, int offset) {
    std::vector<int> first(d.points().block_count(), -1);
    for (int p = 0; p < 2 * r; ++p) {
      int node = offset + p;
      int& f = first[d.points().labels()[p]];
      if (f == -1) f = node;
      else uf.unite(f, node);
    }
  };
  join_blocks(x, 0);
  join_blocks(y, r);
  std::vector<char> touches_boundary(3 * r, 0);
  for (int k = 0; k < r; ++k) touches_boundary[uf.find(k)] = 1;
  for (int k = 0; k < r; ++k) touches_boundary[uf.find(2 * r + k)] = 1;
  DiagramProduct out;
  for (int k = r; k < 2 * r; ++k) {
    int root = uf.find(k);
    if (!touches_boundary[root]) {
      ++out.closed_components;
      touches_boundary[root] = 1;  // count each closed component once
    }
  }
  std::vector<int> labels(2 * r);
  for (int k = 0; k < r; ++k) labels[k] = uf.find(k);
  for (int k = 0; k < r; ++k) labels[r + k] = uf.find(2 * r + k);
  out.diagram = PartitionDiagram(SetPartition::from_labels(labels));
  return out;
}

enum class GeneratorKind { p1, p12, s };

struct Generator {
  GeneratorKind kind = GeneratorKind::p1;
  int index = 0;  // i for s(i), swapping i and i+1

  std::string name() const {
    switch (kind) {
      case GeneratorKind::p1: return "p1";
      case GeneratorKind::p12: return "p12";
      case GeneratorKind::s: return "s" + std::to_string(index);
    }
    return "?";
  }
  friend bool operator==(const Generator&, const Generator&) = default;
};

inline PartitionDiagram generator(GeneratorKind kind, int r, int i = 0) {
  if (r < 1) throw DomainError("generator: r must be positive");
  std::vector<int> labels(2 * r);
  for (int k = 0; k < r; ++k) labels[k] = labels[r + k] = k;
  switch (kind) {
    case GeneratorKind::p1:
      labels[r] = r;  // 1̄ becomes its own block, leaving {1} alone
      break;
    case GeneratorKind::p12:
      if (r < 2) throw DomainError("generator p12 needs r >= 2");
      labels[1] = labels[r + 1] = 0;
      break;
    case GeneratorKind::s:
      if (i < 1 || i >= r) throw DomainError("generator s(i) needs 1 <= i < r");
      labels[r + i - 1] = i;      // i  joins (i+1)̄
      labels[r + i] = i - 1;      // i+1 joins ī
      break;
  }
  return PartitionDiagram(SetPartition::from_labels(labels));
}

inline PartitionDiagram generator(const Generator& g, int r) { return generator(g.kind, r, g.index); }

// p1, p12 (when r >= 2), then s(1) .. s(r-1).
inline std::vector<Generator> generators_for(int r) {
  std::vector<Generator> out{{GeneratorKind::p1, 0}};
  if (r >= 2) out.push_back({GeneratorKind::p12, 0});
  for (int i = 1; i < r; ++i) out.push_back({GeneratorKind::s, i});
  return out;
}

inline Generator parse_generator(std::string_view name) {
  if (name == "p1") return {GeneratorKind::p1, 0};
  if (name == "p12") return {GeneratorKind::p12, 0};
  if (name.size() >= 2 && name[0] == 's') return {GeneratorKind::s, detail::parse_index(std::string(name.substr(1)))};
  throw ParseError("unknown generator '" + std::string(name) + "'");
}

struct ConcatenationResult {
  int closed_components = 0;
  SetPartition southern;
};

// Action of a diagram on the one-row module Δ(∅): L sits on top of d; the
// components that never reach d's southern row are closed.
inline ConcatenationResult delta_empty_action(const SetPartition& top, const PartitionDiagram& d) {
  int r = d.size();
  if (top.ground_size() != r) throw SizeMismatch("delta_empty_action: sizes differ");
  detail::UnionFind uf(2 * r);
  std::vector<int> first(top.block_count(), -1);
  for (int k = 0; k < r; ++k) {
    int& f = first[top.labels()[k]];
    if (f == -1) f = k;
    else uf.unite(f, k);
  }
  std::vector<int> dfirst(d.points().block_count(), -1);
  for (int p = 0; p < 2 * r; ++p) {
    int& f = dfirst[d.points().labels()[p]];
    if (f == -1) f = p;
    else uf.unite(f, p);
  }
  std::vector<char> reaches_south(2 * r, 0);
  for (int k = 0; k < r; ++k) reaches_south[uf.find(r + k)] = 1;
  ConcatenationResult out;
  for (int k = 0; k < r; ++k) {
    int root = uf.find(k);
    if (!reaches_south[root]) {
      ++out.closed_components;
      reaches_south[root] = 1;
    }
  }
  std::vector<int> labels(r);
  for (int k = 0; k < r; ++k) labels[k] = uf.find(r + k);
  out.southern = SetPartition::from_labels(labels);
  return out;
}

// All (r,r)-partition diagrams, ordered as set-partitions of 2r points.
inline std::vector<PartitionDiagram> enumerate_diagrams(int r) {
  std::vector<PartitionDiagram> out;
  for_each_set_partition(2 * r, [&](const SetPartition& p) { out.emplace_back(p); });
  return out;
}

// A finite linear combination of diagrams with coefficients in Z[δ₁, δ₂].
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const PartitionDiagram& d, TwoParamScalar c = 1) { add(d, c); }  // NOLINT

  const std::map<PartitionDiagram, TwoParamScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PartitionDiagram& d, const TwoParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")" + d.to_string();
    }
    return out;
  }

 private:
  std::map<PartitionDiagram, TwoParamScalar> terms_;
};

// Bilinear extension of diagram multiplication; each diagram product with t
// closed components contributes (δ₁δ₂)^t.
inline AlgebraElement multiply_elements(const AlgebraElement& u, const AlgebraElement& v) {
  AlgebraElement out;
  int size = -1;
  auto check = [&](const PartitionDiagram& d) {
    if (size == -1) size = d.size();
    else if (size != d.size()) throw SizeMismatch("multiply_elements: sizes differ");
  };
  for (const auto& [x, cx] : u.terms()) check(x);
  for (const auto& [y, cy] : v.terms()) check(y);
  for (const auto& [x, cx] : u.terms()) {
    for (const auto& [y, cy] : v.terms()) {
      auto prod = multiply_diagrams(x, y);
      unsigned t = static_cast<unsigned>(prod.closed_components);
      out.add(prod.diagram, cx * cy * TwoParamScalar::monomial(t, t));
    }
  }
  return out;
}

inline AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) { return multiply_elements(u, v); }

}  // namespace foulkes
