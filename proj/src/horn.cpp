#include "conespec/horn.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "conespec/lr.hpp"
#include "conespec/spectrum.hpp"

namespace conespec {

namespace {

struct Indexed {
  IndexSubset subset;
  Partition partition;
};

// r-subsets of [n] bucketed by |μ(A)|, each bucket in lexicographic order.
std::map<int, std::vector<Indexed>> subsets_by_weight(int n, int r) {
  std::map<int, std::vector<Indexed>> out;
  for_each_subset(n, r, [&](const IndexSubset& s) {
    Partition p = mu(s);
    const int w = p.weight();
    out[w].push_back({s, std::move(p)});
  });
  return out;
}

std::string triple_tag(int r, const IndexSubset& i, const IndexSubset& j, const IndexSubset& k) {
  return "r=" + std::to_string(r) + " I=" + i.to_string() + " J=" + j.to_string() + " K=" + k.to_string();
}

template <typename T>
Verdict horn_member_impl(std::span<const T> x, std::span<const T> y, std::span<const T> z,
                         const std::function<MembershipResult(const ConeDescription&, std::span<const T>)>& check) {
  const std::size_t n = x.size();
  require_length(y.size(), n, "y");
  require_length(z.size(), n, "z");
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "empty spectra");
  require_decreasing(x, "x");
  require_decreasing(y, "y");
  require_decreasing(z, "z");
  const auto& desc = horn_cached(static_cast<int>(n), false);
  const auto point = concat<T>({x, y, z});
  return make_verdict(desc, check(desc, point));
}

}  // namespace

std::vector<HornTriple> horn_triples(int n, int r, bool c1_only) {
  if (r < 1 || r >= n) {
    throw Error(ErrorKind::InvalidRange, "horn_triples needs 1 <= r < n (n=" + std::to_string(n) +
                                             ", r=" + std::to_string(r) + ")");
  }
  const auto buckets = subsets_by_weight(n, r);
  const auto all = subsets(n, r);
  std::vector<Indexed> indexed;
  for (const auto& s : all) indexed.push_back({s, mu(s)});

  std::vector<HornTriple> out;
  for (const auto& i : indexed) {
    for (const auto& j : indexed) {
      const auto bucket = buckets.find(i.partition.weight() + j.partition.weight());
      if (bucket == buckets.end()) continue;
      for (const auto& k : bucket->second) {
        const LRQuery q{k.partition, i.partition, j.partition};
        if (c1_only ? lr_equals_one(q) : lr_nonzero(q)) out.push_back({n, r, i.subset, j.subset, k.subset});
      }
    }
  }
  return out;
}

ConeDescription horn_description(int n, const HornOptions& options) {
  if (n < 1) throw Error(ErrorKind::InvalidRange, "Horn(n) needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  ConeDescription desc("Horn(" + std::to_string(n) + ")",
                       {{"x", "x", un, ChamberKind::Sorted, true},
                        {"y", "y", un, ChamberKind::Sorted, true},
                        {"z", "z", un, ChamberKind::Sorted, false}});
  auto trace = desc.zero_row();
  for (int i = 1; i <= n; ++i) {
    desc.bump(trace, 0, i, 1);
    desc.bump(trace, 1, i, 1);
    desc.bump(trace, 2, i, -1);
  }
  desc.add_equality(std::move(trace), "trace");
  for (int r = 1; r < n; ++r) {
    for (const auto& t : horn_triples(n, r, options.c1_only)) {
      auto row = desc.zero_row();
      for (int a : t.I.elements()) desc.bump(row, 0, a, 1);
      for (int a : t.J.elements()) desc.bump(row, 1, a, 1);
      for (int a : t.K.elements()) desc.bump(row, 2, a, -1);
      desc.add_inequality(std::move(row), triple_tag(r, t.I, t.J, t.K));
    }
  }
  if (options.chamber) desc.add_chamber_rows();
  return desc;
}

const ConeDescription& horn_cached(int n, bool c1_only) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::unique_ptr<ConeDescription>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, c1_only}];
  if (!slot) slot = std::make_unique<ConeDescription>(horn_description(n, {c1_only, false}));
  return *slot;
}

Verdict horn_member(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> z) {
  return horn_member_impl<Rational>(x, y, z, [](const ConeDescription& d, std::span<const Rational> p) {
    return check_point(d, p);
  });
}

Verdict horn_member(std::span<const double> x, std::span<const double> y, std::span<const double> z, double tol) {
  return horn_member_impl<double>(x, y, z, [tol](const ConeDescription& d, std::span<const double> p) {
    return check_point(d, p, tol);
  });
}

}  // namespace conespec
