#include "conespec/document.hpp"

#include <json.hpp>

namespace conespec {

using nlohmann::ordered_json;

namespace {

std::string chamber_name(ChamberKind kind) { return kind == ChamberKind::Sorted ? "sorted" : "sorted_nonneg"; }

ordered_json row_json(const ConeDescription& desc, const LinearInequality& row) {
  ordered_json coeffs = ordered_json::object();
  for (std::size_t b = 0; b < desc.blocks().size(); ++b) {
    const auto first = row.coeffs.begin() + static_cast<std::ptrdiff_t>(desc.block_offset(b));
    coeffs[desc.blocks()[b].name] =
        std::vector<std::int64_t>(first, first + static_cast<std::ptrdiff_t>(desc.blocks()[b].dim));
  }
  return {{"coeffs", coeffs}, {"provenance", row.provenance}};
}

template <typename T>
T field(const ordered_json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::Schema, std::string(where) + " lacks \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::Schema, std::string(where) + ": \"" + key + "\" has the wrong type");
  }
}

LinearInequality parse_row(const ConeDescription& desc, const ordered_json& j, Relation relation) {
  const auto coeffs = field<ordered_json>(j, "coeffs", "row");
  if (!coeffs.is_object() || coeffs.size() != desc.blocks().size()) {
    throw Error(ErrorKind::Schema, "row coefficients must name every block once");
  }
  LinearInequality row{desc.zero_row(), relation, field<std::string>(j, "provenance", "row")};
  for (std::size_t b = 0; b < desc.blocks().size(); ++b) {
    const auto& block = desc.blocks()[b];
    const auto part = field<std::vector<std::int64_t>>(coeffs, block.name.c_str(), "row coefficients");
    if (part.size() != block.dim) throw Error(ErrorKind::Schema, "block " + block.name + " has the wrong length");
    std::copy(part.begin(), part.end(), row.coeffs.begin() + static_cast<std::ptrdiff_t>(desc.block_offset(b)));
  }
  return row;
}

}  // namespace

bool operator==(const InequalityDocument& a, const InequalityDocument& b) {
  const auto& da = a.description;
  const auto& db = b.description;
  return a.cone == b.cone && a.params == b.params && a.method == b.method && da.name() == db.name() &&
         da.blocks() == db.blocks() && da.equalities() == db.equalities() && da.inequalities() == db.inequalities();
}

InequalityDocument make_document(const ConeRequest& request, ConeDescription description) {
  const auto r = normalize(request);
  return {to_string(r.kind), r.params, r.method, std::move(description)};
}

std::string render_json(const InequalityDocument& doc) {
  const auto& desc = doc.description;
  ordered_json j;
  j["schema"] = kDocumentSchema;
  j["cone"] = doc.cone;
  j["name"] = desc.name();
  j["params"] = doc.params;
  j["method"] = doc.method;
  ordered_json blocks = ordered_json::array();
  for (const auto& b : desc.blocks()) {
    blocks.push_back({{"name", b.name},
                      {"label", b.label},
                      {"dim", b.dim},
                      {"chamber", chamber_name(b.chamber)},
                      {"side", b.lhs ? "lhs" : "rhs"}});
  }
  j["blocks"] = blocks;
  j["equalities"] = ordered_json::array();
  for (const auto& row : desc.equalities()) j["equalities"].push_back(row_json(desc, row));
  j["inequalities"] = ordered_json::array();
  for (const auto& row : desc.inequalities()) j["inequalities"].push_back(row_json(desc, row));
  return j.dump(2) + "\n";
}

InequalityDocument parse_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (field<std::string>(j, "schema", "document") != kDocumentSchema) {
    throw Error(ErrorKind::Schema, "unsupported schema, expected " + std::string(kDocumentSchema));
  }
  std::vector<Block> blocks;
  const auto block_list = field<ordered_json>(j, "blocks", "document");
  if (!block_list.is_array()) throw Error(ErrorKind::Schema, "\"blocks\" must be an array");
  for (const auto& b : block_list) {
    const auto chamber = field<std::string>(b, "chamber", "block");
    const auto side = field<std::string>(b, "side", "block");
    if (chamber != "sorted" && chamber != "sorted_nonneg") throw Error(ErrorKind::Schema, "bad chamber " + chamber);
    if (side != "lhs" && side != "rhs") throw Error(ErrorKind::Schema, "bad side " + side);
    blocks.push_back({field<std::string>(b, "name", "block"), field<std::string>(b, "label", "block"),
                      field<std::size_t>(b, "dim", "block"),
                      chamber == "sorted" ? ChamberKind::Sorted : ChamberKind::SortedNonneg, side == "lhs"});
  }
  InequalityDocument doc{field<std::string>(j, "cone", "document"),
                         field<std::map<std::string, int>>(j, "params", "document"),
                         field<std::string>(j, "method", "document"),
                         ConeDescription(field<std::string>(j, "name", "document"), blocks)};
  for (const auto& [key, relation] : {std::pair{"equalities", Relation::Equal},
                                      std::pair{"inequalities", Relation::GreaterEqual}}) {
    const auto rows = field<ordered_json>(j, key, "document");
    if (!rows.is_array()) throw Error(ErrorKind::Schema, std::string("\"") + key + "\" must be an array");
    for (const auto& r : rows) doc.description.add(parse_row(doc.description, r, relation));
  }
  return doc;
}

std::string render_text(const InequalityDocument& doc) {
  std::string out;
  for (const auto& row : doc.description.equalities()) out += doc.description.render(row) + "\n";
  for (const auto& row : doc.description.inequalities()) out += doc.description.render(row) + "\n";
  return out;
}

}  // namespace conespec
