#include "conespec/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace conespec {

namespace {

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &out)) {
    throw Error(ErrorKind::ResourceLimit, "integer overflow in row arithmetic");
  }
  return out;
}

void append_term(std::string& out, std::int64_t magnitude, const std::string& label, bool negative) {
  if (out.empty()) {
    if (negative) out += "−";
  } else {
    out += negative ? " − " : " + ";
  }
  if (magnitude != 1) out += std::to_string(magnitude);
  out += label;
}

}  // namespace

bool is_zero(const LinearInequality& row) {
  return std::all_of(row.coeffs.begin(), row.coeffs.end(), [](std::int64_t c) { return c == 0; });
}

LinearInequality canonicalize(LinearInequality row) {
  std::int64_t g = 0;
  for (std::int64_t c : row.coeffs) g = std::gcd(g, c < 0 ? -c : c);
  if (g == 0) return row;
  if (row.relation == Relation::Equal) {
    const auto lead = std::find_if(row.coeffs.begin(), row.coeffs.end(), [](std::int64_t c) { return c != 0; });
    if (*lead < 0) g = -g;
  }
  for (auto& c : row.coeffs) c /= g;
  return row;
}

ConeDescription::ConeDescription(std::string name, std::vector<Block> blocks)
    : name_(std::move(name)), blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    offsets_.push_back(dimension_);
    dimension_ += b.dim;
  }
}

std::size_t ConeDescription::block_index(const std::string& name) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].name == name) return i;
  }
  throw Error(ErrorKind::Schema, "no block named '" + name + "' in " + name_);
}

bool ConeDescription::add(LinearInequality row) {
  if (row.coeffs.size() != dimension_) {
    throw Error(ErrorKind::DimensionMismatch, "row length " + std::to_string(row.coeffs.size()) +
                                                  " in a cone of dimension " + std::to_string(dimension_));
  }
  row = canonicalize(std::move(row));
  if (is_zero(row)) return false;
  const int tag = row.relation == Relation::Equal ? 1 : 0;
  if (!seen_.emplace(tag, row.coeffs).second) return false;
  (row.relation == Relation::Equal ? equalities_ : inequalities_).push_back(std::move(row));
  return true;
}

bool ConeDescription::add_inequality(std::vector<std::int64_t> coeffs, std::string provenance) {
  return add(LinearInequality{std::move(coeffs), Relation::GreaterEqual, std::move(provenance)});
}

bool ConeDescription::add_equality(std::vector<std::int64_t> coeffs, std::string provenance) {
  return add(LinearInequality{std::move(coeffs), Relation::Equal, std::move(provenance)});
}

void ConeDescription::bump(std::vector<std::int64_t>& row, std::size_t block, int index, std::int64_t weight) const {
  if (index < 1 || static_cast<std::size_t>(index) > blocks_.at(block).dim) {
    throw Error(ErrorKind::InvalidRange, "coordinate " + std::to_string(index) + " outside block " +
                                             blocks_[block].name);
  }
  row[offsets_[block] + static_cast<std::size_t>(index - 1)] += weight;
}

std::vector<LinearInequality> ConeDescription::chamber_rows() const {
  std::vector<LinearInequality> rows;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto dim = static_cast<int>(blocks_[b].dim);
    for (int i = 1; i < dim; ++i) {
      auto row = zero_row();
      bump(row, b, i, 1);
      bump(row, b, i + 1, -1);
      rows.push_back({std::move(row), Relation::GreaterEqual, "chamber"});
    }
    if (blocks_[b].chamber == ChamberKind::SortedNonneg && dim > 0) {
      auto row = zero_row();
      bump(row, b, dim, 1);
      rows.push_back({std::move(row), Relation::GreaterEqual, "chamber"});
    }
  }
  return rows;
}

void ConeDescription::add_chamber_rows() {
  for (auto& row : chamber_rows()) add(std::move(row));
}

ConeDescription ConeDescription::without_chamber_implied() const {
  ConeDescription out(name_, blocks_);
  for (const auto& row : equalities_) out.add(row);
  for (const auto& row : inequalities_) {
    if (!implied_by_chamber(*this, row)) out.add(row);
  }
  return out;
}

ConeDescription ConeDescription::subset(std::span<const std::size_t> inequality_rows) const {
  ConeDescription out(name_, blocks_);
  for (const auto& row : equalities_) out.add(row);
  for (std::size_t i : inequality_rows) out.add(inequalities_.at(i));
  return out;
}

std::string ConeDescription::coordinate_label(std::size_t coordinate) const {
  for (std::size_t b = blocks_.size(); b-- > 0;) {
    if (coordinate >= offsets_[b]) return blocks_[b].label + std::to_string(coordinate - offsets_[b] + 1);
  }
  throw Error(ErrorKind::InvalidRange, "coordinate outside cone");
}

std::string ConeDescription::render(const LinearInequality& row) const {
  std::size_t touched = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto first = row.coeffs.begin() + static_cast<std::ptrdiff_t>(offsets_[b]);
    if (std::any_of(first, first + static_cast<std::ptrdiff_t>(blocks_[b].dim), [](std::int64_t c) { return c != 0; })) {
      ++touched;
    }
  }
  std::string left;
  std::string right;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (std::size_t i = 0; i < blocks_[b].dim; ++i) {
      const std::int64_t c = row.coeffs[offsets_[b] + i];
      if (c == 0) continue;
      const std::string label = blocks_[b].label + std::to_string(i + 1);
      const bool on_left = touched > 1 ? blocks_[b].lhs : c > 0;
      const std::int64_t signed_c = on_left ? c : -c;
      append_term(on_left ? left : right, signed_c < 0 ? -signed_c : signed_c, label, signed_c < 0);
    }
  }
  // "−a ≥ −b" reads better as "a ≤ b".
  auto all_negated = [](const std::string& side) {
    if (side.empty()) return true;
    if (side.rfind("−", 0) != 0) return false;
    return side.find(" + ") == std::string::npos;
  };
  if (row.relation == Relation::GreaterEqual && !left.empty() && all_negated(left) && all_negated(right)) {
    auto flip = [](std::string side) {
      if (side.empty()) return std::string("0");
      side.erase(0, std::string("−").size());
      for (auto pos = side.find(" − "); pos != std::string::npos; pos = side.find(" − ", pos + 3)) {
        side.replace(pos, std::string(" − ").size(), " + ");
      }
      return side;
    };
    return flip(left) + " ≤ " + flip(right);
  }
  if (left.empty()) left = "0";
  if (right.empty()) right = "0";
  return left + (row.relation == Relation::Equal ? " = " : " ≥ ") + right;
}

bool ConeDescription::same_rows(const ConeDescription& other) const {
  auto key = [](const std::vector<LinearInequality>& rows) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& r : rows) out.push_back(r.coeffs);
    std::sort(out.begin(), out.end());
    return out;
  };
  return blocks_ == other.blocks_ && key(equalities_) == key(other.equalities_) &&
         key(inequalities_) == key(other.inequalities_);
}

bool implied_by_chamber(const ConeDescription& desc, const LinearInequality& row) {
  if (row.relation == Relation::Equal) return is_zero(row);
  for (std::size_t b = 0; b < desc.blocks().size(); ++b) {
    const auto& block = desc.blocks()[b];
    std::int64_t prefix = 0;
    for (std::size_t i = 0; i < block.dim; ++i) {
      prefix += row.coeffs[desc.block_offset(b) + i];
      if (prefix < 0) return false;
    }
    if (block.chamber == ChamberKind::Sorted && prefix != 0) return false;
  }
  return true;
}

ConeDescription pullback(const ConeDescription& desc, const LinearMap& map, std::string name) {
  ConeDescription target_shape("", map.target);
  ConeDescription out(std::move(name), map.source);
  if (target_shape.dimension() != desc.dimension() || map.matrix.size() != desc.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "linear map target does not match the cone");
  }
  auto pull = [&](const LinearInequality& row) {
    std::vector<std::int64_t> coeffs(out.dimension(), 0);
    for (std::size_t t = 0; t < row.coeffs.size(); ++t) {
      if (row.coeffs[t] == 0) continue;
      const auto& column = map.matrix[t];
      for (std::size_t s = 0; s < coeffs.size(); ++s) {
        if (column[s] != 0) coeffs[s] = checked_mul_add(coeffs[s], row.coeffs[t], column[s]);
      }
    }
    out.add(LinearInequality{std::move(coeffs), row.relation, row.provenance});
  };
  for (const auto& row : desc.equalities()) pull(row);
  for (const auto& row : desc.inequalities()) pull(row);
  return out;
}

namespace {

double as_double(double v) { return v; }
double as_double(const Rational& v) { return to_double(v); }

template <typename T, typename Tol>
MembershipResult check_rows(const ConeDescription& desc, std::span<const T> point, Tol within) {
  if (point.size() != desc.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(point.size()) +
                                                  " coordinates, cone needs " + std::to_string(desc.dimension()));
  }
  MembershipResult result;
  result.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < desc.equalities().size(); ++i) {
    const T value = evaluate(desc.equalities()[i], point);
    const double residual = std::abs(as_double(value));
    result.min_slack = std::min(result.min_slack, -residual);
    if (!within(value, true)) {
      result.member = false;
      result.violated.push_back({Relation::Equal, i});
    }
  }
  for (std::size_t i = 0; i < desc.inequalities().size(); ++i) {
    const T value = evaluate(desc.inequalities()[i], point);
    result.min_slack = std::min(result.min_slack, as_double(value));
    if (!within(value, false)) {
      result.member = false;
      result.violated.push_back({Relation::GreaterEqual, i});
    }
  }
  return result;
}

}  // namespace

MembershipResult check_point(const ConeDescription& desc, std::span<const Rational> point) {
  return check_rows(desc, point, [](const Rational& v, bool equality) { return equality ? v == 0 : v >= 0; });
}

MembershipResult check_point(const ConeDescription& desc, std::span<const double> point, double tol) {
  return check_rows(desc, point, [tol](double v, bool equality) { return equality ? std::abs(v) <= tol : v >= -tol; });
}

Verdict make_verdict(const ConeDescription& desc, const MembershipResult& result) {
  Verdict out{result.member, {}, result.min_slack};
  for (const auto& ref : result.violated) {
    const auto& rows = ref.relation == Relation::Equal ? desc.equalities() : desc.inequalities();
    out.violated.push_back(desc.render(rows.at(ref.index)));
  }
  return out;
}

}  // namespace conespec
