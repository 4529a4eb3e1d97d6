#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "conespec/error.hpp"
#include "conespec/rational.hpp"

namespace conespec {

enum class Relation { GreaterEqual, Equal };

/// Which ordering constraints a coordinate block carries when chamber rows
/// are requested: weakly decreasing, or weakly decreasing and non-negative.
enum class ChamberKind { Sorted, SortedNonneg };

struct Block {
  std::string name;   // JSON key: "lambda", "s", "gamma", "x", …
  std::string label;  // text rendering: "λ", "s", "γ", "x", …
  std::size_t dim = 0;
  ChamberKind chamber = ChamberKind::Sorted;
  /// Side of "≥" the block is printed on in text output.
  bool lhs = true;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Homogeneous row  coeffs · v  (≥ | =)  0  over the concatenated blocks.
struct LinearInequality {
  std::vector<std::int64_t> coeffs;
  Relation relation = Relation::GreaterEqual;
  std::string provenance;

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

/// Divides by the gcd of the coefficients; equalities additionally get a
/// positive leading coefficient. The zero row is returned unchanged.
LinearInequality canonicalize(LinearInequality row);
bool is_zero(const LinearInequality& row);

/// Named system of homogeneous equalities and inequalities. Rows are
/// canonicalized on insertion and exact duplicates are rejected.
class ConeDescription {
 public:
  ConeDescription() = default;
  ConeDescription(std::string name, std::vector<Block> blocks);

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t block_offset(std::size_t block) const { return offsets_.at(block); }
  std::size_t block_index(const std::string& name) const;

  const std::vector<LinearInequality>& equalities() const noexcept { return equalities_; }
  const std::vector<LinearInequality>& inequalities() const noexcept { return inequalities_; }

  /// Returns false when the canonical row is zero or already present.
  bool add(LinearInequality row);
  bool add_inequality(std::vector<std::int64_t> coeffs, std::string provenance = {});
  bool add_equality(std::vector<std::int64_t> coeffs, std::string provenance = {});

  /// Zero vector of the right length, for building rows.
  std::vector<std::int64_t> zero_row() const { return std::vector<std::int64_t>(dimension_, 0); }
  /// Adds `weight` to coordinate `index` (1-based) of block `block` in `row`.
  void bump(std::vector<std::int64_t>& row, std::size_t block, int index, std::int64_t weight) const;

  /// Rows x_i ≥ x_{i+1} inside each block, plus x_dim ≥ 0 for non-negative blocks.
  std::vector<LinearInequality> chamber_rows() const;
  void add_chamber_rows();
  /// Copy without the rows that follow from the chamber constraints alone.
  ConeDescription without_chamber_implied() const;
  /// Copy with only the listed inequality rows (equalities kept).
  ConeDescription subset(std::span<const std::size_t> inequality_rows) const;

  std::string coordinate_label(std::size_t coordinate) const;
  /// Display form, e.g. "λ1 + λ2 − λ3 − λ4 ≥ 2s1 + 2s2".
  std::string render(const LinearInequality& row) const;

  bool same_rows(const ConeDescription& other) const;

 private:
  std::string name_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t dimension_ = 0;
  std::vector<LinearInequality> equalities_;
  std::vector<LinearInequality> inequalities_;
  std::set<std::pair<int, std::vector<std::int64_t>>> seen_;
};

/// True when the row is a non-negative combination of the chamber rows of
/// `desc`: within each block every proper prefix sum of the coefficients is
/// non-negative and the full sum is zero (sorted) or non-negative
/// (sorted, non-negative).
bool implied_by_chamber(const ConeDescription& desc, const LinearInequality& row);

/// Integer linear map between block-structured coordinate spaces: target
/// coordinate t equals Σ_s matrix[t][s]·source_s.
struct LinearMap {
  std::vector<Block> source;
  std::vector<Block> target;
  std::vector<std::vector<std::int64_t>> matrix;
};

/// Rows of `desc` composed with `map`: the cone {v : map(v) ∈ desc}.
/// Zero rows are dropped and duplicates merged.
ConeDescription pullback(const ConeDescription& desc, const LinearMap& map, std::string name);

template <typename T>
T evaluate(const LinearInequality& row, std::span<const T> point) {
  if (row.coeffs.size() != point.size()) {
    throw Error(ErrorKind::DimensionMismatch, "row has " + std::to_string(row.coeffs.size()) +
                                                  " coefficients, point has " + std::to_string(point.size()));
  }
  T total{0};
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (row.coeffs[i] != 0) total += T(row.coeffs[i]) * point[i];
  }
  return total;
}

struct RowRef {
  Relation relation;
  std::size_t index;
  friend bool operator==(const RowRef&, const RowRef&) = default;
};

struct MembershipResult {
  bool member = true;
  std::vector<RowRef> violated;
  /// Smallest inequality value (minus largest |equality residual|); +inf without rows.
  double min_slack = 0;
};

/// Membership outcome with the failing rows already rendered for display.
struct Verdict {
  bool member = true;
  std::vector<std::string> violated;
  double min_slack = 0;
};

Verdict make_verdict(const ConeDescription& desc, const MembershipResult& result);

/// Exact test of every row.
MembershipResult check_point(const ConeDescription& desc, std::span<const Rational> point);
/// Floating test: equalities within `tol`, inequalities ≥ -tol.
MembershipResult check_point(const ConeDescription& desc, std::span<const double> point, double tol);

}  // namespace conespec
