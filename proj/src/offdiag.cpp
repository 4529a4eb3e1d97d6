#include "conespec/offdiag.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "conespec/horn.hpp"
#include "conespec/lrmn.hpp"

namespace conespec {

namespace {

Block lambda_block(int n) { return {"lambda", "λ", static_cast<std::size_t>(n), ChamberKind::Sorted, true}; }
Block gamma_block(int n) { return {"gamma", "γ", static_cast<std::size_t>(n), ChamberKind::SortedNonneg, true}; }
Block singular_block(const char* name, int len) {
  return {name, name, static_cast<std::size_t>(len), ChamberKind::SortedNonneg, false};
}

std::string pq_name(const char* cone, int p, int q) {
  return std::string(cone) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

void require_pq(int p, int q) {
  if (q < 1 || p < q) {
    throw Error(ErrorKind::InvalidRange, "need p >= q >= 1 (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
  }
}

// Writes `block` (rows of `source_block` columns) into the full map matrix.
void place(std::vector<std::vector<std::int64_t>>& matrix, std::size_t row0, std::size_t col0,
           const std::vector<std::vector<std::int64_t>>& block) {
  for (std::size_t r = 0; r < block.size(); ++r) {
    for (std::size_t c = 0; c < block[r].size(); ++c) matrix[row0 + r][col0 + c] = block[r][c];
  }
}

LinearMap make_map(std::vector<Block> source, std::vector<Block> target,
                   const std::vector<std::vector<std::vector<std::int64_t>>>& diagonal_blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : target) rows += b.dim;
  for (const auto& b : source) cols += b.dim;
  std::vector<std::vector<std::int64_t>> matrix(rows, std::vector<std::int64_t>(cols, 0));
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (std::size_t i = 0; i < diagonal_blocks.size(); ++i) {
    place(matrix, r0, c0, diagonal_blocks[i]);
    r0 += target[i].dim;
    c0 += source[i].dim;
  }
  return {std::move(source), std::move(target), std::move(matrix)};
}

void finish(ConeDescription& desc, bool chamber) {
  desc = desc.without_chamber_implied();
  if (chamber) desc.add_chamber_rows();
}

// Adds the row |γ|_{A∩[n]} - |γ|_{A^o∩[n]} - (|s|_{B∩[ls]} - |s|_{B^o∩[ls]}) - (|t|_{C∩[lt]} - |t|_{C^o∩[lt]}) ≥ 0.
void add_folded_row(ConeDescription& desc, const LRmnTriple& t, int n, int ls, int lt) {
  auto row = desc.zero_row();
  for (int a : t.A.restrict_to(n).elements()) desc.bump(row, 0, a, 1);
  for (int a : t.A.reflect().restrict_to(n).elements()) desc.bump(row, 0, a, -1);
  for (int b : t.B.restrict_to(ls).elements()) desc.bump(row, 1, b, -1);
  for (int b : t.B.reflect().restrict_to(ls).elements()) desc.bump(row, 1, b, 1);
  for (int c : t.C.restrict_to(lt).elements()) desc.bump(row, 2, c, -1);
  for (int c : t.C.reflect().restrict_to(lt).elements()) desc.bump(row, 2, c, 1);
  desc.add_inequality(std::move(row), "A=" + t.A.to_string() + " B=" + t.B.to_string() + " C=" + t.C.to_string());
}

void add_difference(ConeDescription& desc, std::size_t big_block, int big, std::size_t small_block, int small,
                    const char* tag) {
  auto row = desc.zero_row();
  desc.bump(row, big_block, big, 1);
  desc.bump(row, small_block, small, -1);
  desc.add_inequality(std::move(row), tag);
}

using CacheKey = std::tuple<char, int, int, int>;

const ConeDescription& cached(CacheKey key, const std::function<ConeDescription()>& build) {
  static std::mutex mutex;
  static std::map<CacheKey, std::unique_ptr<ConeDescription>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<ConeDescription>(build());
  return *slot;
}

template <typename T>
std::vector<T> scaled(std::vector<T> v, int factor) {
  for (auto& x : v) x *= factor;
  return v;
}

template <typename T, typename Check>
Verdict a_member_impl(std::span<const T> lambda, std::span<const T> s, AMethod method, Check check) {
  const int n = static_cast<int>(lambda.size());
  const int q = static_cast<int>(s.size());
  if (q < 1 || n < 2 * q) throw Error(ErrorKind::DimensionMismatch, "A(p,q) needs len(s) = q >= 1 and len(lambda) >= 2q");
  require_decreasing(lambda, "lambda");
  require_decreasing(s, "s");
  require_nonnegative(s, "s");
  const int p = n - q;
  if (method == AMethod::Embed) {
    const auto y = star(lambda);
    const auto z = scaled(hat_pq(s, p, q), 2);
    return check.horn(lambda, std::span<const T>(y), std::span<const T>(z));
  }
  const auto& desc = cached({'A', p, q, 0}, [&] { return a_description(p, q, AMethod::Fflp); });
  const auto point = concat<T>({lambda, s});
  return make_verdict(desc, check.rows(desc, point));
}

template <typename T>
void require_singular(std::span<const T> v, const char* name) {
  require_decreasing(v, name);
  require_nonnegative(v, name);
}

template <typename T, typename Check>
Verdict s_member_impl(std::span<const T> gamma, std::span<const T> s, std::span<const T> t, BlockMethod method,
                      Check check) {
  const int q = static_cast<int>(s.size());
  const int n = static_cast<int>(gamma.size());
  require_length(t.size(), s.size(), "t");
  if (q < 1 || n < 2 * q) throw Error(ErrorKind::DimensionMismatch, "S(p,q) needs len(s) = len(t) = q >= 1 and len(gamma) >= 2q");
  require_singular(gamma, "gamma");
  require_singular(s, "s");
  require_singular(t, "t");
  const int p = n - q;
  if (method == BlockMethod::Pullback) {
    const auto x = hat_pq(gamma, n, n);
    const auto y = hat_pq(s, p, q);
    const auto z = hat_pq(t, p, q);
    return check.lrmn(std::span<const T>(x), std::span<const T>(y), std::span<const T>(z));
  }
  const auto& desc = cached({'S', p, q, 0}, [&] { return s_description(p, q, BlockMethod::Direct); });
  const auto point = concat<T>({gamma, s, t});
  return make_verdict(desc, check.rows(desc, point));
}

template <typename T, typename Check>
Verdict t_member_impl(std::span<const T> gamma, std::span<const T> s, std::span<const T> t, BlockMethod method,
                      Check check) {
  const int p = static_cast<int>(s.size());
  const int q = static_cast<int>(t.size());
  if (q < 1 || p < q) throw Error(ErrorKind::DimensionMismatch, "T(p,q) needs len(s) = p >= len(t) = q >= 1");
  require_length(gamma.size(), s.size() + t.size(), "gamma");
  require_singular(gamma, "gamma");
  require_singular(s, "s");
  require_singular(t, "t");
  const int n = p + q;
  if (method == BlockMethod::Pullback) {
    const auto x = hat_pq(gamma, n, n);
    const auto y = hat_pq(s, p, p);
    const auto z = hat_pq(t, q, q);
    return check.lrmn(std::span<const T>(x), std::span<const T>(y), std::span<const T>(z));
  }
  const auto& desc = cached({'T', p, q, 0}, [&] { return t_description(p, q, BlockMethod::Direct); });
  const auto point = concat<T>({gamma, s, t});
  return make_verdict(desc, check.rows(desc, point));
}

struct ExactCheck {
  MembershipResult rows(const ConeDescription& d, std::span<const Rational> p) const { return check_point(d, p); }
  Verdict horn(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> z) const {
    return horn_member(x, y, z);
  }
  Verdict lrmn(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> z) const {
    return lrmn_member(x, y, z);
  }
};

struct FloatCheck {
  double tol;
  MembershipResult rows(const ConeDescription& d, std::span<const double> p) const { return check_point(d, p, tol); }
  Verdict horn(std::span<const double> x, std::span<const double> y, std::span<const double> z) const {
    return horn_member(x, y, z, tol);
  }
  Verdict lrmn(std::span<const double> x, std::span<const double> y, std::span<const double> z) const {
    return lrmn_member(x, y, z, tol);
  }
};

}  // namespace

std::vector<std::vector<std::int64_t>> hat_matrix(int p, int q, std::int64_t scale) {
  if (q < 0 || p < q) throw Error(ErrorKind::InvalidRange, "hat_matrix needs p >= q >= 0");
  const auto len = static_cast<std::size_t>(p + q);
  std::vector<std::vector<std::int64_t>> m(len, std::vector<std::int64_t>(static_cast<std::size_t>(q), 0));
  for (std::size_t k = 0; k < static_cast<std::size_t>(q); ++k) {
    m[k][k] = scale;
    m[len - 1 - k][k] = -scale;
  }
  return m;
}

ConeDescription a_description(int p, int q, AMethod method, bool chamber) {
  require_pq(p, q);
  const int n = p + q;
  if (method == AMethod::Embed) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::vector<std::int64_t>> identity(un, std::vector<std::int64_t>(un, 0));
    std::vector<std::vector<std::int64_t>> reversal(un, std::vector<std::int64_t>(un, 0));
    for (std::size_t i = 0; i < un; ++i) {
      identity[i][i] = 1;
      reversal[i][un - 1 - i] = -1;
    }
    const auto horn = horn_description(n);
    auto lambda_to_xy = identity;
    lambda_to_xy.insert(lambda_to_xy.end(), reversal.begin(), reversal.end());
    // Rows: x = λ, y = λ*, z = 2ŝ^{p,q}; columns: λ then s.
    std::vector<std::vector<std::int64_t>> matrix(3 * un, std::vector<std::int64_t>(un + static_cast<std::size_t>(q), 0));
    place(matrix, 0, 0, lambda_to_xy);
    place(matrix, 2 * un, un, hat_matrix(p, q, 2));
    LinearMap map{{lambda_block(n), singular_block("s", q)}, horn.blocks(), std::move(matrix)};
    auto desc = pullback(horn, map, pq_name("A", p, q));
    finish(desc, chamber);
    return desc;
  }

  ConeDescription desc(pq_name("A", p, q), {lambda_block(n), singular_block("s", q)});
  auto add_row = [&](const IndexSubset& i, const IndexSubset& j, const IndexSubset& k, int r) {
    auto row = desc.zero_row();
    for (int a : i.elements()) desc.bump(row, 0, a, 1);
    for (int a : j.elements()) desc.bump(row, 0, n + 1 - a, -1);
    for (int a : k.elements()) desc.bump(row, 1, a, -2);
    desc.add_inequality(std::move(row), "r=" + std::to_string(r) + " I=" + i.to_string() + " J=" + j.to_string() +
                                            " K=" + k.to_string());
  };
  for (int r = 1; r < q; ++r) {
    for (const auto& t : horn_triples(q, r, false)) add_row(t.I, t.J, t.K, r);
  }
  const auto all = IndexSubset::full(q);
  add_row(all, all, all, q);
  if (chamber) desc.add_chamber_rows();
  return desc;
}

ConeDescription s_description(int p, int q, BlockMethod method, bool chamber) {
  require_pq(p, q);
  const int n = p + q;
  std::vector<Block> blocks{gamma_block(n), singular_block("s", q), singular_block("t", q)};
  if (method == BlockMethod::Pullback) {
    const auto lr = lrmn_description(n, n);
    auto desc = pullback(lr, make_map(blocks, lr.blocks(), {hat_matrix(n, n), hat_matrix(p, q), hat_matrix(p, q)}),
                         pq_name("S", p, q));
    finish(desc, chamber);
    return desc;
  }
  ConeDescription desc(pq_name("S", p, q), blocks);
  for (int k = 1; k <= q; ++k) {
    add_difference(desc, 0, k, 1, k, "bound");
    add_difference(desc, 0, k, 2, k, "bound");
  }
  for (const auto& t : lrmn_triples(n, n, false, true)) add_folded_row(desc, t, n, q, q);
  finish(desc, chamber);
  return desc;
}

ConeDescription t_description(int p, int q, BlockMethod method, bool chamber) {
  require_pq(p, q);
  const int n = p + q;
  std::vector<Block> blocks{gamma_block(n), singular_block("s", p), singular_block("t", q)};
  if (method == BlockMethod::Pullback) {
    const auto lr = lrmn_description(2 * p, 2 * q);
    auto desc = pullback(lr, make_map(blocks, lr.blocks(), {hat_matrix(n, n), hat_matrix(p, p), hat_matrix(q, q)}),
                         pq_name("T", p, q));
    finish(desc, chamber);
    return desc;
  }
  ConeDescription desc(pq_name("T", p, q), blocks);
  for (int k = 1; k <= p; ++k) add_difference(desc, 0, k, 1, k, "bound");
  for (int j = 1; j <= q; ++j) add_difference(desc, 0, j, 2, j, "bound");
  for (int l = 1; l <= p - q; ++l) add_difference(desc, 1, l, 0, 2 * q + l, "bound");
  for (const auto& t : lrmn_triples(2 * p, 2 * q, false, true)) add_folded_row(desc, t, n, p, q);
  finish(desc, chamber);
  return desc;
}

ConeDescription thompson_rows(int p) {
  if (p < 1) throw Error(ErrorKind::InvalidRange, "thompson_rows needs p >= 1");
  ConeDescription desc("Thompson(" + std::to_string(p) + ")", {gamma_block(p + 1), singular_block("s", p)});
  for (int j = 1; j <= p; ++j) {
    if (j + 2 <= p + 1) add_difference(desc, 1, j, 0, j + 2, "interlacing");
    add_difference(desc, 0, j, 1, j, "interlacing");
  }
  return desc;
}

Verdict a_member(std::span<const Rational> lambda, std::span<const Rational> s, AMethod method) {
  return a_member_impl(lambda, s, method, ExactCheck{});
}

Verdict a_member(std::span<const double> lambda, std::span<const double> s, AMethod method, double tol) {
  return a_member_impl(lambda, s, method, FloatCheck{tol});
}

Verdict s_member(std::span<const Rational> gamma, std::span<const Rational> s, std::span<const Rational> t,
                 BlockMethod method) {
  return s_member_impl(gamma, s, t, method, ExactCheck{});
}

Verdict s_member(std::span<const double> gamma, std::span<const double> s, std::span<const double> t, double tol,
                 BlockMethod method) {
  return s_member_impl(gamma, s, t, method, FloatCheck{tol});
}

Verdict t_member(std::span<const Rational> gamma, std::span<const Rational> s, std::span<const Rational> t,
                 BlockMethod method) {
  return t_member_impl(gamma, s, t, method, ExactCheck{});
}

Verdict t_member(std::span<const double> gamma, std::span<const double> s, std::span<const double> t, double tol,
                 BlockMethod method) {
  return t_member_impl(gamma, s, t, method, FloatCheck{tol});
}

}  // namespace conespec
