#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "foulkes/error.hpp"

namespace foulkes {

// A weakly decreasing sequence of positive integers. The empty partition is
// allowed and stands for the partition of zero.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  IntegerPartition(std::initializer_list<int> parts) : IntegerPartition(std::vector<int>(parts)) {}

  // Throws ParseError unless `parts` is weakly decreasing and positive.
  explicit IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw ParseError("partition parts must be weakly decreasing");
    }
  }

  // Sorts and drops zeros before validating.
  static IntegerPartition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return IntegerPartition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  // Multiplicity of part value `k`.
  int multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

  bool has_part_one() const { return !parts_.empty() && parts_.back() == 1; }
  bool is_even() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
  }

  IntegerPartition conjugate() const {
    std::vector<int> out;
    for (int c = 1; c <= first(); ++c) {
      int len = 0;
      for (int p : parts_) len += p >= c ? 1 : 0;
      out.push_back(len);
    }
    return IntegerPartition(std::move(out));
  }

  // Partition obtained by scaling every part by k.
  IntegerPartition scaled(int k) const {
    std::vector<int> out(parts_);
    for (int& p : out) p *= k;
    return IntegerPartition(std::move(out));
  }

  // Comma-separated parts; "-" for the empty partition.
  std::string to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
  }

  // Lexicographic comparison of the part sequences. Reverse-lexicographic
  // order, used for tables, is the reverse of this.
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;
  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<int> parts_;
};

// Accepts "4,2,2", "4, 2 ,2", "-" and "" (the empty partition).
inline IntegerPartition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty() || s == "-") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
      throw ParseError("cannot parse partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return IntegerPartition(std::move(parts));
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, int min_part, std::vector<int>& cur,
                           std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= min_part; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, min_part, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
inline std::vector<IntegerPartition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: negative size");
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, 1, cur, out);
  return out;
}

// Partitions of r with every part at least 2, reverse-lexicographic.
// partitions_no_ones(0) holds only the empty partition.
inline std::vector<IntegerPartition> partitions_no_ones(int r) {
  if (r < 0) throw DomainError("partitions_no_ones: negative size");
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  detail::partitions_rec(r, r, 2, cur, out);
  return out;
}

// Partitions of k whose Young diagram fits in a box of the given width
// (largest part) and height (number of parts).
inline long long count_partitions_in_box(int k, int width, int height) {
  if (k < 0 || width < 0 || height < 0) return 0;
  // ways[h][s]: partitions of s into at most h parts, parts bounded by the
  // values processed so far.
  std::vector<std::vector<long long>> ways(height + 1, std::vector<long long>(k + 1, 0));
  for (int h = 0; h <= height; ++h) ways[h][0] = 1;
  for (int part = 1; part <= std::min(width, k); ++part) {
    std::vector<std::vector<long long>> next = ways;
    for (int h = 1; h <= height; ++h)
      for (int s = part; s <= k; ++s) next[h][s] += next[h - 1][s - part];
    ways = std::move(next);
  }
  return ways[height][k];
}

// λ_[N] = (N − |λ|, λ₁, λ₂, …). Throws ParseError if the result is not a partition.
inline IntegerPartition pad_partition(const IntegerPartition& lambda, int total) {
  int top = total - lambda.size();
  if (top < lambda.first() || top < 0)
    throw ParseError("padding " + lambda.to_string() + " to " + std::to_string(total) +
                     " does not give a partition");
  std::vector<int> parts;
  if (top > 0) parts.push_back(top);
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return IntegerPartition(std::move(parts));
}

}  // namespace foulkes

template <>
struct std::hash<foulkes::IntegerPartition> {
  std::size_t operator()(const foulkes::IntegerPartition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};
