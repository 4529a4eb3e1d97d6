#pragma once

#include <map>
#include <string>

#include "conespec/catalog.hpp"
#include "conespec/cone.hpp"

namespace conespec {

inline constexpr const char* kDocumentSchema = "conespec.inequalities/1";

/// Generated inequality list plus the request that produced it.
struct InequalityDocument {
  std::string cone;
  std::map<std::string, int> params;
  std::string method;
  ConeDescription description;

  friend bool operator==(const InequalityDocument& a, const InequalityDocument& b);
};

InequalityDocument make_document(const ConeRequest& request, ConeDescription description);

/// Pretty-printed JSON, keys in a fixed order.
std::string render_json(const InequalityDocument& doc);
/// Throws Parse on malformed JSON and Schema on a structurally wrong document.
InequalityDocument parse_json(const std::string& text);

/// One row per line in display form, equalities first.
std::string render_text(const InequalityDocument& doc);

}  // namespace conespec
