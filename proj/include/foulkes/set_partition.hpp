#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "foulkes/error.hpp"
#include "foulkes/integer_partition.hpp"
#include "foulkes/limits.hpp"

namespace foulkes {

// A set-partition of {1..r} stored as its restricted growth string: entry k
// is the index of the block containing element k+1, with blocks numbered by
// increasing minima. The representation is canonical, so equality, ordering
// and hashing work directly on the label array.
class SetPartition {
 public:
  SetPartition() = default;

  // Relabels arbitrary block labels (one per element) into canonical form.
  static SetPartition from_labels(std::span<const int> labels) {
    SetPartition out;
    out.labels_.resize(labels.size());
    std::map<int, std::uint8_t> seen;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      auto [it, inserted] = seen.emplace(labels[k], static_cast<std::uint8_t>(seen.size()));
      out.labels_[k] = it->second;
    }
    out.blocks_ = static_cast<int>(seen.size());
    return out;
  }

  // Trusts that `rgs` is already a restricted growth string with `blocks` values.
  static SetPartition from_restricted_growth(std::span<const int> rgs, int blocks) {
    SetPartition out;
    out.labels_.assign(rgs.begin(), rgs.end());
    out.blocks_ = blocks;
    return out;
  }

  static SetPartition singletons(int r) {
    SetPartition out;
    out.labels_.resize(r);
    for (int k = 0; k < r; ++k) out.labels_[k] = static_cast<std::uint8_t>(k);
    out.blocks_ = r;
    return out;
  }

  static SetPartition one_block(int r) {
    SetPartition out;
    out.labels_.assign(r, 0);
    out.blocks_ = r > 0 ? 1 : 0;
    return out;
  }

  // Λ_μ = {{1..μ₁}, {μ₁+1..μ₁+μ₂}, ...}.
  static SetPartition consecutive(const IntegerPartition& shape) {
    std::vector<int> labels;
    for (std::size_t b = 0; b < shape.length(); ++b) labels.insert(labels.end(), shape[b], static_cast<int>(b));
    return from_labels(labels);
  }

  int ground_size() const { return static_cast<int>(labels_.size()); }
  int block_count() const { return blocks_; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }

  // Block index (0-based, in minima order) of a 1-based element.
  int block_of(int element) const { return labels_.at(element - 1); }
  bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

  // Blocks as sorted 1-based element lists, ordered by increasing minima.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (std::size_t k = 0; k < labels_.size(); ++k) out[labels_[k]].push_back(static_cast<int>(k) + 1);
    return out;
  }

  std::vector<int> block_sizes() const {
    std::vector<int> sizes(blocks_, 0);
    for (auto l : labels_) ++sizes[l];
    return sizes;
  }

  // Block sizes sorted into a partition of r.
  IntegerPartition shape() const { return IntegerPartition::from_unsorted(block_sizes()); }

  bool has_singleton_block() const {
    auto sizes = block_sizes();
    return std::find(sizes.begin(), sizes.end(), 1) != sizes.end();
  }
  bool has_non_singleton_block() const { return blocks_ < ground_size(); }
  bool is_singletons() const { return blocks_ == ground_size(); }

  // Image under a permutation of {1..r} given 0-based: element k goes to perm[k].
  SetPartition permuted(std::span<const int> perm) const {
    std::vector<int> labels(labels_.size());
    for (std::size_t k = 0; k < labels_.size(); ++k) labels[perm[k]] = labels_[k];
    return from_labels(labels);
  }

  // Whether the permutation (0-based images) maps every block onto a block.
  bool fixed_by(std::span<const int> perm) const {
    std::uint8_t image[256];
    std::fill_n(image, blocks_, std::uint8_t{255});
    for (std::size_t k = 0; k < labels_.size(); ++k) {
      std::uint8_t target = labels_[perm[k]];
      std::uint8_t& slot = image[labels_[k]];
      if (slot == 255) {
        slot = target;
      } else if (slot != target) {
        return false;
      }
    }
    return true;
  }

  // Text form `{1,2,4|3|5,7,8|6,9}`.
  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      if (b) os << '|';
      for (std::size_t i = 0; i < bs[b].size(); ++i) os << (i ? "," : "") << bs[b][i];
    }
    os << '}';
    return os.str();
  }

  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.labels_ <=> b.labels_;
  }
  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::uint8_t> labels_;
  int blocks_ = 0;
};

// Builds the canonical set-partition from explicit 1-based blocks. Throws
// ParseError on empty blocks, overlaps, out-of-range or missing elements.
inline SetPartition canonicalize(const std::vector<std::vector<int>>& blocks, int r) {
  if (r <= 0) throw ParseError("set-partition ground size must be positive");
  std::vector<int> labels(r, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ParseError("set-partition has an empty block");
    for (int e : blocks[b]) {
      if (e < 1 || e > r) throw ParseError("element " + std::to_string(e) + " outside {1.." + std::to_string(r) + "}");
      if (labels[e - 1] != -1) throw ParseError("element " + std::to_string(e) + " occurs in two blocks");
      labels[e - 1] = static_cast<int>(b);
    }
  }
  for (int k = 0; k < r; ++k)
    if (labels[k] == -1) throw ParseError("element " + std::to_string(k + 1) + " is missing");
  return SetPartition::from_labels(labels);
}

// True iff every block of `a` lies inside a block of `b`.
inline bool refines(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size()) throw SizeMismatch("refines: ground sizes differ");
  std::vector<int> target(a.block_count(), -1);
  for (int k = 0; k < a.ground_size(); ++k) {
    int& t = target[a.labels()[k]];
    if (t == -1) {
      t = b.labels()[k];
    } else if (t != b.labels()[k]) {
      return false;
    }
  }
  return true;
}

// Calls `visit(const SetPartition&)` on every set-partition of {1..r} in
// restricted-growth-string lexicographic order, without materialising them.
template <typename Visitor>
void for_each_set_partition(int r, Visitor&& visit) {
  if (r <= 0) throw DomainError("set-partition ground size must be positive");
  require_within_cap(r, max_r(), "enumerate_set_partitions");
  std::vector<int> rgs(r, 0);
  std::vector<int> prefix_max(r, 0);
  SetPartition current;
  while (true) {
    current = SetPartition::from_restricted_growth(rgs, prefix_max[r - 1] + 1);
    visit(current);
    int k = r - 1;
    while (k > 0 && rgs[k] == prefix_max[k - 1] + 1) --k;
    if (k == 0) return;
    ++rgs[k];
    prefix_max[k] = std::max(prefix_max[k - 1], rgs[k]);
    for (int j = k + 1; j < r; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[k];
    }
  }
}

inline std::vector<SetPartition> enumerate_set_partitions(int r) {
  std::vector<SetPartition> out;
  for_each_set_partition(r, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

inline long long bell_number(int n) {
  if (n < 0) return 0;
  // Bell triangle.
  std::vector<long long> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<long long> next{row.back()};
    for (long long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

// An element (Λ, Λ′) of the fixed-depth Foulkes poset: `inner` refines `outer`.
struct FoulkesPair {
  SetPartition inner;
  SetPartition outer;

  FoulkesPair() = default;
  FoulkesPair(SetPartition in, SetPartition out) : inner(std::move(in)), outer(std::move(out)) {
    if (!refines(inner, outer)) throw DomainError("Foulkes pair: inner does not refine outer");
  }

  int ground_size() const { return inner.ground_size(); }

  // Text form `inner ; outer`.
  std::string to_string() const { return inner.to_string() + " ; " + outer.to_string(); }

  friend auto operator<=>(const FoulkesPair&, const FoulkesPair&) = default;
  friend bool operator==(const FoulkesPair&, const FoulkesPair&) = default;
};

// ℓ(inner) − ℓ(outer).
inline int depth(const FoulkesPair& p) { return p.inner.block_count() - p.outer.block_count(); }

// Whether `p` lies in the truncation F^r_{m,n}: at most n outer blocks, and
// at most m inner blocks inside any one outer block.
inline bool in_truncated_poset(const FoulkesPair& p, int m, int n) {
  if (p.outer.block_count() > n) return false;
  std::vector<int> inner_per_outer(p.outer.block_count(), 0);
  std::vector<bool> counted(p.inner.block_count(), false);
  for (int k = 0; k < p.ground_size(); ++k) {
    int ib = p.inner.labels()[k];
    if (counted[ib]) continue;
    counted[ib] = true;
    if (++inner_per_outer[p.outer.labels()[k]] > m) return false;
  }
  return true;
}

// All of F^r, sorted by depth, then inner, then outer (both in
// restricted-growth order). Each filtration piece F^r_k is a prefix.
inline std::vector<FoulkesPair> enumerate_foulkes_poset(int r) {
  auto all = enumerate_set_partitions(r);
  std::vector<std::vector<FoulkesPair>> by_depth(r);
  for (const auto& inner : all)
    for (const auto& outer : all)
      if (refines(inner, outer)) by_depth[inner.block_count() - outer.block_count()].emplace_back(inner, outer);
  std::vector<FoulkesPair> out;
  for (auto& layer : by_depth) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

namespace detail {

// Parses `{a,b|c}` with element tokens handed to `element`, which maps a
// token to a 0-based point index or throws.
template <typename TokenFn>
std::vector<std::vector<int>> parse_blocks(std::string_view text, TokenFn element) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n') s.push_back(c);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("set-partition must be enclosed in braces: '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::vector<int>> blocks(1);
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) throw ParseError("empty element in '" + std::string(text) + "'");
    blocks.back().push_back(element(tok));
    tok.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else if (c == '|') {
      flush();
      blocks.emplace_back();
    } else {
      tok.push_back(c);
    }
  }
  flush();
  return blocks;
}

inline int parse_index(const std::string& tok) {
  if (tok.empty() || tok.size() > 4 || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad element '" + tok + "'");
  return std::stoi(tok);
}

}  // namespace detail

// Parses `{1,2,4|3}`; the ground size is the largest element.
inline SetPartition parse_set_partition(std::string_view text) {
  auto blocks = detail::parse_blocks(text, [](const std::string& tok) { return detail::parse_index(tok); });
  int r = 0;
  for (const auto& b : blocks)
    for (int e : b) r = std::max(r, e);
  return canonicalize(blocks, r);
}

// Parses `inner ; outer`.
inline FoulkesPair parse_foulkes_pair(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("Foulkes pair needs 'inner ; outer'");
  auto inner = parse_set_partition(text.substr(0, semi));
  auto outer = parse_set_partition(text.substr(semi + 1));
  if (inner.ground_size() != outer.ground_size()) throw SizeMismatch("Foulkes pair: ground sizes differ");
  if (!refines(inner, outer)) throw ParseError("Foulkes pair: inner does not refine outer");
  return FoulkesPair(inner, outer);
}

}  // namespace foulkes

template <>
struct std::hash<foulkes::SetPartition> {
  std::size_t operator()(const foulkes::SetPartition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : p.labels()) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

template <>
struct std::hash<foulkes::FoulkesPair> {
  std::size_t operator()(const foulkes::FoulkesPair& p) const noexcept {
    std::size_t a = std::hash<foulkes::SetPartition>{}(p.inner);
    std::size_t b = std::hash<foulkes::SetPartition>{}(p.outer);
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  }
};
