#pragma once

#include <cstdlib>
#include <string>

#include "foulkes/error.hpp"

namespace foulkes {

inline constexpr int kDefaultMaxR = 12;
inline constexpr int kDefaultOracleMaxDegree = 16;  // bound on mn for the power-sum oracle
inline constexpr int kDefaultModuleMatrixMaxR = 6;
inline constexpr long long kTensorVectorCap = 100000;  // (mn)^r for a single vector
inline constexpr long long kTensorMatrixCap = 4096;    // (mn)^r for a square matrix

// Largest ground-set size accepted by the enumerators. PLETHYSM_MAX_R
// overrides the default; the value is read on every call so tests can
// change it.
inline int max_r() {
  if (const char* env = std::getenv("PLETHYSM_MAX_R"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0 && v <= 64) return static_cast<int>(v);
  }
  return kDefaultMaxR;
}

// Matrix dumps and module introspection stay at or below this size unless
// PLETHYSM_MAX_R raises the global cap beyond it.
inline int module_matrix_max_r() {
  int global = max_r();
  return global > kDefaultMaxR ? global : (global < kDefaultModuleMatrixMaxR ? global : kDefaultModuleMatrixMaxR);
}

inline void require_within_cap(int r, int cap, const char* what) {
  if (r > cap) {
    throw ResourceError(std::string(what) + ": size " + std::to_string(r) + " exceeds cap " +
                        std::to_string(cap) + " (set PLETHYSM_MAX_R to override)");
  }
}

}  // namespace foulkes
