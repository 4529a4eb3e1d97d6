#pragma once

#include <span>
#include <string>
#include <vector>

#include "conespec/error.hpp"
#include "conespec/rational.hpp"

namespace conespec {

/// Throws NotSorted unless v is weakly decreasing.
template <typename T>
void require_decreasing(std::span<const T> v, const std::string& what) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1]) throw Error(ErrorKind::NotSorted, what + " must be weakly decreasing");
  }
}

/// Throws NegativeEntry if any entry is negative.
template <typename T>
void require_nonnegative(std::span<const T> v, const std::string& what) {
  for (const auto& x : v) {
    if (x < 0) throw Error(ErrorKind::NegativeEntry, what + " has a negative entry");
  }
}

inline void require_length(std::size_t got, std::size_t want, const std::string& what) {
  if (got != want) {
    throw Error(ErrorKind::DimensionMismatch,
                what + " has length " + std::to_string(got) + ", expected " + std::to_string(want));
  }
}

template <typename T>
std::vector<T> concat(std::initializer_list<std::span<const T>> parts) {
  std::vector<T> out;
  for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace conespec
