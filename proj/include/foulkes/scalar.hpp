#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "foulkes/error.hpp"

namespace foulkes {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceError("integer overflow in exact arithmetic");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("integer overflow in exact arithmetic");
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, unsigned exp) {
  std::int64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace detail

// Exponent pair (a, b) of the monomial δ₁^a δ₂^b.
using Exponents = std::pair<unsigned, unsigned>;

// An integer polynomial in δ₁, δ₂. Zero coefficients are never stored.
class TwoParamScalar {
 public:
  TwoParamScalar() = default;
  TwoParamScalar(std::int64_t constant) {  // NOLINT: implicit from integers is intended
    if (constant != 0) terms_[{0, 0}] = constant;
  }

  static TwoParamScalar monomial(unsigned a, unsigned b, std::int64_t coefficient = 1) {
    TwoParamScalar out;
    if (coefficient != 0) out.terms_[{a, b}] = coefficient;
    return out;
  }

  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(unsigned a, unsigned b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? 0 : it->second;
  }

  // Single term with coefficient one.
  bool is_unit_monomial() const { return terms_.size() == 1 && terms_.begin()->second == 1; }

  TwoParamScalar& operator+=(const TwoParamScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend TwoParamScalar operator+(TwoParamScalar a, const TwoParamScalar& b) { return a += b; }

  friend TwoParamScalar operator-(const TwoParamScalar& a) {
    TwoParamScalar out;
    for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
    return out;
  }

  friend TwoParamScalar operator-(TwoParamScalar a, const TwoParamScalar& b) { return a += -b; }

  friend TwoParamScalar operator*(const TwoParamScalar& a, const TwoParamScalar& b) {
    TwoParamScalar out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term({ea.first + eb.first, ea.second + eb.second}, detail::checked_mul(ca, cb));
    return out;
  }

  TwoParamScalar& operator*=(const TwoParamScalar& o) { return *this = *this * o; }

  // The same polynomial with δ₁ and δ₂ exchanged.
  TwoParamScalar swapped() const {
    TwoParamScalar out;
    for (const auto& [e, c] : terms_) out.terms_[{e.second, e.first}] = c;
    return out;
  }

  std::int64_t evaluate(std::int64_t d1, std::int64_t d2) const {
    std::int64_t total = 0;
    for (const auto& [e, c] : terms_) {
      std::int64_t v = detail::checked_mul(c, detail::checked_mul(detail::checked_pow(d1, e.first), detail::checked_pow(d2, e.second)));
      total = detail::checked_add(total, v);
    }
    return total;
  }

  // Readable form, e.g. "0", "1", "d1*d2", "2*d1^2 + d2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << '-';
      first = false;
      std::int64_t mag = c < 0 ? -c : c;
      bool has_var = e.first > 0 || e.second > 0;
      if (mag != 1 || !has_var) os << mag;
      bool need_star = mag != 1 || !has_var;
      auto var = [&](const char* name, unsigned p) {
        if (p == 0) return;
        if (need_star) os << '*';
        os << name;
        if (p > 1) os << '^' << p;
        need_star = true;
      };
      var("d1", e.first);
      var("d2", e.second);
    }
    return os.str();
  }

  // Fully explicit form used in matrix dumps: terms `c*d1^a*d2^b` joined by '+'.
  std::string to_dump_string() const {
    if (terms_.empty()) return "0*d1^0*d2^0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << '+';
      first = false;
      os << c << "*d1^" << e.first << "*d2^" << e.second;
    }
    return os.str();
  }

  friend bool operator==(const TwoParamScalar&, const TwoParamScalar&) = default;

 private:
  void add_term(Exponents e, std::int64_t c) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    } else if (c == 0) {
      terms_.erase(it);
    }
  }

  std::map<Exponents, std::int64_t> terms_;
};

}  // namespace foulkes
