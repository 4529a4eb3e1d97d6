#include "conespec/lrmn.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "conespec/lr.hpp"
#include "conespec/spectrum.hpp"

namespace conespec {

namespace {

template <typename T>
Verdict lrmn_member_impl(std::span<const T> x, std::span<const T> y, std::span<const T> z,
                         const std::function<MembershipResult(const ConeDescription&, std::span<const T>)>& check) {
  if (y.empty() || z.empty()) throw Error(ErrorKind::DimensionMismatch, "LR(m,n) needs m, n >= 1");
  require_length(x.size(), y.size() + z.size(), "x");
  require_decreasing(x, "x");
  require_decreasing(y, "y");
  require_decreasing(z, "z");
  const auto& desc = lrmn_cached(static_cast<int>(y.size()), static_cast<int>(z.size()));
  const auto point = concat<T>({x, y, z});
  return make_verdict(desc, check(desc, point));
}

}  // namespace

Partition mu_or_empty(const IndexSubset& subset) { return subset.empty() ? Partition{} : mu(subset); }

std::vector<LRmnTriple> lrmn_triples(int m, int n, bool c1_only, bool half_only) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidRange, "LR(m,n) needs m, n >= 1");
  const int total = m + n;
  // Candidate A's of each size, bucketed by |μ(A)|.
  std::vector<std::map<int, std::vector<std::pair<IndexSubset, Partition>>>> by_size(static_cast<std::size_t>(total + 1));
  std::vector<LRmnTriple> out;
  for (int size = 1; size <= total; ++size) {
    if (half_only && 2 * size > total) break;
    auto& buckets = by_size[static_cast<std::size_t>(size)];
    for_each_subset(total, size, [&](const IndexSubset& a) {
      Partition p = mu(a);
      const int w = p.weight();
      buckets[w].emplace_back(a, std::move(p));
    });
    for (int b = 0; b < m && b <= size; ++b) {
      const int c = size - b;
      if (c >= n) continue;
      for (const auto& bs : subsets(m, b)) {
        const Partition mb = mu_or_empty(bs);
        for (const auto& cs : subsets(n, c)) {
          const Partition mc = mu_or_empty(cs);
          const auto bucket = buckets.find(mb.weight() + mc.weight());
          if (bucket == buckets.end()) continue;
          for (const auto& [as, ma] : bucket->second) {
            const LRQuery q{ma, mb, mc};
            if (c1_only ? lr_equals_one(q) : lr_nonzero(q)) out.push_back({m, n, as, bs, cs});
          }
        }
      }
    }
  }
  return out;
}

ConeDescription lrmn_description(int m, int n, const LRmnOptions& options) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidRange, "LR(m,n) needs m, n >= 1");
  const auto um = static_cast<std::size_t>(m);
  const auto un = static_cast<std::size_t>(n);
  ConeDescription desc("LR(" + std::to_string(m) + "," + std::to_string(n) + ")",
                       {{"x", "x", um + un, ChamberKind::Sorted, true},
                        {"y", "y", um, ChamberKind::Sorted, false},
                        {"z", "z", un, ChamberKind::Sorted, false}});
  auto trace = desc.zero_row();
  for (int i = 1; i <= m + n; ++i) desc.bump(trace, 0, i, 1);
  for (int k = 1; k <= m; ++k) desc.bump(trace, 1, k, -1);
  for (int l = 1; l <= n; ++l) desc.bump(trace, 2, l, -1);
  desc.add_equality(std::move(trace), "trace");

  // x_{n+k} ≤ y_k ≤ x_k and x_{m+l} ≤ z_l ≤ x_l.
  for (int k = 1; k <= m; ++k) {
    auto upper = desc.zero_row();
    desc.bump(upper, 0, k, 1);
    desc.bump(upper, 1, k, -1);
    desc.add_inequality(std::move(upper), "interlacing");
    auto lower = desc.zero_row();
    desc.bump(lower, 1, k, 1);
    desc.bump(lower, 0, n + k, -1);
    desc.add_inequality(std::move(lower), "interlacing");
  }
  for (int l = 1; l <= n; ++l) {
    auto upper = desc.zero_row();
    desc.bump(upper, 0, l, 1);
    desc.bump(upper, 2, l, -1);
    desc.add_inequality(std::move(upper), "interlacing");
    auto lower = desc.zero_row();
    desc.bump(lower, 2, l, 1);
    desc.bump(lower, 0, m + l, -1);
    desc.add_inequality(std::move(lower), "interlacing");
  }

  for (const auto& t : lrmn_triples(m, n, options.c1_only, !options.full)) {
    const std::string tag = "A=" + t.A.to_string() + " B=" + t.B.to_string() + " C=" + t.C.to_string();
    auto row = desc.zero_row();
    for (int a : t.A.elements()) desc.bump(row, 0, a, 1);
    for (int b : t.B.elements()) desc.bump(row, 1, b, -1);
    for (int c : t.C.elements()) desc.bump(row, 2, c, -1);
    desc.add_inequality(std::move(row), tag);
    if (!options.full) {
      auto dual = desc.zero_row();
      for (int a : t.A.reflect().elements()) desc.bump(dual, 0, a, -1);
      for (int b : t.B.reflect().elements()) desc.bump(dual, 1, b, 1);
      for (int c : t.C.reflect().elements()) desc.bump(dual, 2, c, 1);
      desc.add_inequality(std::move(dual), "dual " + tag);
    }
  }
  if (options.chamber) desc.add_chamber_rows();
  return desc;
}

const ConeDescription& lrmn_cached(int m, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ConeDescription>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, n}];
  if (!slot) slot = std::make_unique<ConeDescription>(lrmn_description(m, n));
  return *slot;
}

Verdict lrmn_member(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> z) {
  return lrmn_member_impl<Rational>(x, y, z, [](const ConeDescription& d, std::span<const Rational> p) {
    return check_point(d, p);
  });
}

Verdict lrmn_member(std::span<const double> x, std::span<const double> y, std::span<const double> z, double tol) {
  return lrmn_member_impl<double>(x, y, z, [tol](const ConeDescription& d, std::span<const double> p) {
    return check_point(d, p, tol);
  });
}

}  // namespace conespec
