#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conespec/cone.hpp"
#include "conespec/rational.hpp"

namespace conespec {

enum class ConeKind { Horn, LRmn, A, S, T, Thompson };

/// "horn", "lrmn", "A", "S", "T", "thompson" (case-insensitive). Throws Parse.
ConeKind parse_cone_kind(const std::string& text);
std::string to_string(ConeKind kind);

/// Parameters and generator switches shared by the CLI, documents and harness.
struct ConeRequest {
  ConeKind kind = ConeKind::Horn;
  /// horn: n; lrmn: m, n; A/S/T: p, q; thompson: p.
  std::map<std::string, int> params;
  /// "" picks the default: fflp for A, direct for S and T, "theorem" otherwise.
  std::string method;
  bool c1_only = false;
  bool chamber = false;
  /// LR(m,n): every triple instead of the half list plus dual rows.
  bool full = false;
};

/// Validates parameters (p ≥ q ≥ 1 and so on) and fills in the method name.
/// Throws InvalidRange or Parse.
ConeRequest normalize(ConeRequest request);

ConeDescription generate(const ConeRequest& request);

/// Parses "lambda=1,0,-1;s=1/2" against the blocks of `desc`. Every block must
/// appear exactly once. Entries are exact rationals, or decimals when
/// `allow_decimal`. Throws Parse or DimensionMismatch.
std::vector<Rational> parse_point(const ConeDescription& desc, const std::string& text, bool allow_decimal);

}  // namespace conespec
