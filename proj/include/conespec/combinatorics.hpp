#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conespec/error.hpp"

namespace conespec {

/// Weakly decreasing sequence of non-negative integers, stored without
/// trailing zeros.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const& noexcept { return parts_; }
  std::vector<int> parts() && noexcept { return std::move(parts_); }
  /// Number of non-zero parts.
  std::size_t length() const noexcept { return parts_.size(); }
  /// Sum of the parts, |λ|.
  int weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  /// Part i (0-based); zero beyond the length.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  /// Parts padded with zeros to exactly `len` entries (len >= length()).
  std::vector<int> padded(std::size_t len) const;
  /// Young diagram containment: this ⊆ other.
  bool contained_in(const Partition& other) const noexcept;
  Partition conjugate() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Strictly increasing subset of [ℓ] = {1, …, ℓ}, 1-indexed.
class IndexSubset {
 public:
  IndexSubset(int ambient, std::vector<int> elements);
  IndexSubset(int ambient, std::initializer_list<int> elements)
      : IndexSubset(ambient, std::vector<int>(elements)) {}

  static IndexSubset full(int ambient);
  static IndexSubset none(int ambient) { return IndexSubset(ambient, std::vector<int>{}); }

  int ambient() const noexcept { return ambient_; }
  const std::vector<int>& elements() const& noexcept { return elements_; }
  // By value on temporaries, so `for (int a : s.reflect().elements())` is safe.
  std::vector<int> elements() && noexcept { return std::move(elements_); }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(int e) const noexcept;

  /// A^o = {ℓ+1-a : a ∈ A}.
  IndexSubset reflect() const;
  /// A^c = [ℓ] \ A.
  IndexSubset complement() const;
  /// Elements of A that are at most `bound` (A ∩ [bound]); ambient becomes `bound`.
  IndexSubset restrict_to(int bound) const;
  std::string to_string() const;

  friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;

 private:
  int ambient_;
  std::vector<int> elements_;
};

/// "3,2,1" → (3,2,1); "" and "0" give the empty partition. Throws Parse,
/// or InvalidRange / NotSorted from the Partition constructor.
Partition parse_partition(std::string_view text);

/// μ(A) = (a_r - r, …, a_1 - 1). Throws EmptySubset on A = ∅.
Partition mu(const IndexSubset& subset);

/// All r-subsets of [ℓ] in lexicographic order. Throws InvalidRange unless 0 <= r <= ℓ.
std::vector<IndexSubset> subsets(int ambient, int r);

/// Streams the r-subsets of [ℓ] in lexicographic order without materializing them.
void for_each_subset(int ambient, int r, const std::function<void(const IndexSubset&)>& visit);

std::size_t binomial(int n, int k);

/// |x|_A = Σ_{a∈A} x_a.
template <typename T>
T subset_sum(std::span<const T> x, const IndexSubset& subset) {
  if (static_cast<std::size_t>(subset.ambient()) != x.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "subset ambient " + std::to_string(subset.ambient()) + " vs vector length " +
                    std::to_string(x.size()));
  }
  T total{0};
  for (int a : subset.elements()) total += x[static_cast<std::size_t>(a - 1)];
  return total;
}

template <typename T>
T subset_sum(const std::vector<T>& x, const IndexSubset& subset) {
  return subset_sum(std::span<const T>(x), subset);
}

}  // namespace conespec
