#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "conespec/cone.hpp"
#include "conespec/matrix.hpp"
#include "conespec/rational.hpp"

namespace testing_support {

using namespace conespec;

// Coefficients of one side of "2lambda1 - lambda4 + s2", block names spelled out.
inline void parse_side(const ConeDescription& desc, const std::string& side, std::int64_t sign,
                       std::vector<std::int64_t>& row) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < side.size() && std::isspace(static_cast<unsigned char>(side[i]))) ++i;
  };
  skip();
  if (side.substr(i) == "0") return;
  while (i < side.size()) {
    std::int64_t term_sign = 1;
    if (side[i] == '+' || side[i] == '-') {
      term_sign = side[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    std::int64_t coeff = 0;
    bool has_coeff = false;
    while (i < side.size() && std::isdigit(static_cast<unsigned char>(side[i]))) {
      coeff = coeff * 10 + (side[i++] - '0');
      has_coeff = true;
    }
    std::string name;
    while (i < side.size() && std::isalpha(static_cast<unsigned char>(side[i]))) name += side[i++];
    int index = 0;
    while (i < side.size() && std::isdigit(static_cast<unsigned char>(side[i]))) index = index * 10 + (side[i++] - '0');
    desc.bump(row, desc.block_index(name), index, sign * term_sign * (has_coeff ? coeff : 1));
    skip();
  }
}

// Adds a row written like "gamma1 - gamma3 >= s1 - t1" (also "<=" and "=").
inline void add_row(ConeDescription& desc, const std::string& text) {
  auto row = desc.zero_row();
  for (const char* op : {">=", "<=", "="}) {
    const auto at = text.find(op);
    if (at == std::string::npos) continue;
    const std::int64_t flip = std::string(op) == "<=" ? -1 : 1;
    parse_side(desc, text.substr(0, at), flip, row);
    parse_side(desc, text.substr(at + std::string(op).size()), -flip, row);
    if (std::string(op) == "=") {
      desc.add_equality(row, text);
    } else {
      desc.add_inequality(row, text);
    }
    return;
  }
  throw Error(ErrorKind::Parse, "no relation in " + text);
}

inline ConeDescription described(const ConeDescription& shape, const std::vector<std::string>& rows) {
  ConeDescription desc(shape.name(), shape.blocks());
  for (const auto& r : rows) add_row(desc, r);
  return desc;
}

// Sorted vector of `len` rationals with denominators up to 6, entries in [lo, hi].
inline std::vector<Rational> sorted_rationals(Rng& rng, std::size_t len, int lo, int hi) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < len; ++i) {
    const auto den = rng.uniform_int(1, 6);
    v.emplace_back(rng.uniform_int(lo * den, hi * den), den);
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? worst : 1e300;
}

}  // namespace testing_support
