#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "foulkes/error.hpp"
#include "foulkes/scalar.hpp"

namespace foulkes {

// Sparse exact-integer matrix, row-major. Rows are ordered maps so iteration
// and equality are deterministic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  std::int64_t at(std::size_t i, std::size_t j) const {
    check(i, j);
    auto it = data_[i].find(j);
    return it == data_[i].end() ? 0 : it->second;
  }

  void set(std::size_t i, std::size_t j, std::int64_t v) {
    check(i, j);
    if (v == 0) data_[i].erase(j);
    else data_[i][j] = v;
  }

  void add(std::size_t i, std::size_t j, std::int64_t v) {
    check(i, j);
    if (v == 0) return;
    auto [it, inserted] = data_[i].emplace(j, v);
    if (!inserted) {
      it->second = detail::checked_add(it->second, v);
      if (it->second == 0) data_[i].erase(it);
    }
  }

  const std::map<std::size_t, std::int64_t>& row(std::size_t i) const { return data_.at(i); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  IntMatrix scaled(std::int64_t k) const {
    IntMatrix out(rows(), cols());
    if (k == 0) return out;
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : data_[i]) out.data_[i][j] = detail::checked_mul(v, k);
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw SizeMismatch("IntMatrix product: inner dimensions differ");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const auto& [k, av] : a.data_[i])
        for (const auto& [j, bv] : b.data_[k]) out.add(i, j, detail::checked_mul(av, bv));
    return out;
  }

  // Row vector times matrix: the right action on coordinate vectors.
  std::vector<std::int64_t> left_multiply(const std::vector<std::int64_t>& v) const {
    if (v.size() != rows()) throw SizeMismatch("IntMatrix: vector length differs from row count");
    std::vector<std::int64_t> out(cols(), 0);
    for (std::size_t i = 0; i < rows(); ++i) {
      if (v[i] == 0) continue;
      for (const auto& [j, m] : data_[i]) out[j] = detail::checked_add(out[j], detail::checked_mul(v[i], m));
    }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows() || j >= cols()) throw DomainError("IntMatrix index out of range");
  }

  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, std::int64_t>> data_;
};

}  // namespace foulkes
