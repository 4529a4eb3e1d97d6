#include "conespec/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "conespec/horn.hpp"
#include "conespec/lrmn.hpp"
#include "conespec/offdiag.hpp"

namespace conespec {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

int param(const ConeRequest& r, const std::string& key) {
  auto it = r.params.find(key);
  if (it == r.params.end()) throw Error(ErrorKind::InvalidRange, to_string(r.kind) + " needs parameter " + key);
  return it->second;
}

void keep_only(ConeRequest& r, std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : r.params) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
      throw Error(ErrorKind::InvalidRange, to_string(r.kind) + " takes no parameter " + key);
    }
  }
}

}  // namespace

ConeKind parse_cone_kind(const std::string& text) {
  const auto t = lower(text);
  if (t == "horn") return ConeKind::Horn;
  if (t == "lrmn" || t == "lr") return ConeKind::LRmn;
  if (t == "a") return ConeKind::A;
  if (t == "s") return ConeKind::S;
  if (t == "t") return ConeKind::T;
  if (t == "thompson") return ConeKind::Thompson;
  throw Error(ErrorKind::Parse, "unknown cone '" + text + "'");
}

std::string to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::Horn: return "horn";
    case ConeKind::LRmn: return "lrmn";
    case ConeKind::A: return "A";
    case ConeKind::S: return "S";
    case ConeKind::T: return "T";
    case ConeKind::Thompson: return "thompson";
  }
  return "?";
}

ConeRequest normalize(ConeRequest r) {
  auto need_positive = [&](const char* key) {
    if (param(r, key) < 1) throw Error(ErrorKind::InvalidRange, std::string(key) + " must be at least 1");
  };
  std::vector<std::string> methods;
  switch (r.kind) {
    case ConeKind::Horn:
      keep_only(r, {"n"});
      need_positive("n");
      methods = {"theorem"};
      break;
    case ConeKind::LRmn:
      keep_only(r, {"m", "n"});
      need_positive("m");
      need_positive("n");
      methods = {"theorem"};
      break;
    case ConeKind::A:
    case ConeKind::S:
    case ConeKind::T:
      keep_only(r, {"p", "q"});
      need_positive("q");
      if (param(r, "p") < param(r, "q")) throw Error(ErrorKind::InvalidRange, "needs p >= q >= 1");
      methods = r.kind == ConeKind::A ? std::vector<std::string>{"fflp", "embed"}
                                      : std::vector<std::string>{"direct", "pullback"};
      break;
    case ConeKind::Thompson:
      keep_only(r, {"p"});
      need_positive("p");
      methods = {"theorem"};
      break;
  }
  if (r.method.empty()) r.method = methods.front();
  r.method = lower(r.method);
  if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
    throw Error(ErrorKind::InvalidRange, "method '" + r.method + "' does not apply to " + to_string(r.kind));
  }
  if (r.c1_only && r.kind != ConeKind::Horn && r.kind != ConeKind::LRmn) {
    throw Error(ErrorKind::InvalidRange, "--c1 applies to horn and lrmn only");
  }
  if (r.full && r.kind != ConeKind::LRmn) throw Error(ErrorKind::InvalidRange, "--full applies to lrmn only");
  return r;
}

ConeDescription generate(const ConeRequest& request) {
  const auto r = normalize(request);
  switch (r.kind) {
    case ConeKind::Horn:
      return horn_description(param(r, "n"), {r.c1_only, r.chamber});
    case ConeKind::LRmn:
      return lrmn_description(param(r, "m"), param(r, "n"), {r.c1_only, r.full, r.chamber});
    case ConeKind::A:
      return a_description(param(r, "p"), param(r, "q"), r.method == "embed" ? AMethod::Embed : AMethod::Fflp,
                           r.chamber);
    case ConeKind::S:
    case ConeKind::T: {
      const auto method = r.method == "pullback" ? BlockMethod::Pullback : BlockMethod::Direct;
      return r.kind == ConeKind::S ? s_description(param(r, "p"), param(r, "q"), method, r.chamber)
                                   : t_description(param(r, "p"), param(r, "q"), method, r.chamber);
    }
    case ConeKind::Thompson: {
      auto desc = thompson_rows(param(r, "p"));
      if (r.chamber) desc.add_chamber_rows();
      return desc;
    }
  }
  throw Error(ErrorKind::InvalidRange, "unknown cone");
}

std::vector<Rational> parse_point(const ConeDescription& desc, const std::string& text, bool allow_decimal) {
  std::vector<std::optional<std::vector<Rational>>> values(desc.blocks().size());
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "expected block=values in '" + part + "'");
    std::string name = part.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }), name.end());
    std::size_t b = desc.blocks().size();
    for (std::size_t i = 0; i < desc.blocks().size(); ++i) {
      if (desc.blocks()[i].name == name || desc.blocks()[i].label == name) b = i;
    }
    if (b == desc.blocks().size()) throw Error(ErrorKind::Parse, "unknown block '" + name + "'");
    if (values[b]) throw Error(ErrorKind::Parse, "block '" + name + "' given twice");
    std::vector<Rational> entries;
    std::stringstream items(part.substr(eq + 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      const bool decimal = item.find_first_of(".eE") != std::string::npos;
      if (decimal && !allow_decimal) throw Error(ErrorKind::Parse, "decimal '" + item + "' needs --tol");
      entries.push_back(decimal ? parse_decimal(item) : parse_rational(item));
    }
    if (entries.size() != desc.blocks()[b].dim) {
      throw Error(ErrorKind::DimensionMismatch, "block '" + name + "' needs " + std::to_string(desc.blocks()[b].dim) +
                                                    " entries, got " + std::to_string(entries.size()));
    }
    values[b] = std::move(entries);
  }
  std::vector<Rational> point;
  for (std::size_t b = 0; b < values.size(); ++b) {
    if (!values[b]) throw Error(ErrorKind::Parse, "missing block '" + desc.blocks()[b].name + "'");
    point.insert(point.end(), values[b]->begin(), values[b]->end());
  }
  return point;
}

}  // namespace conespec
