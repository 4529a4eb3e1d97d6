#include "conespec/lr.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace conespec {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::ResourceLimit, "64-bit overflow");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::ResourceLimit, "64-bit overflow");
  return out;
}

// Fills λ/μ in reverse reading order (rows top to bottom, each row right to
// left) keeping the running content a lattice word bounded by ν.
class LRTableauCounter {
 public:
  LRTableauCounter(const LRQuery& q, std::uint64_t limit)
      : lambda_(q.lambda.parts()), limit_(limit), nu_(q.nu.parts()) {
    const std::size_t rows = lambda_.size();
    inner_ = q.mu.padded(rows);
    grid_.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      grid_[r].assign(static_cast<std::size_t>(lambda_[r]), 0);
      for (int c = lambda_[r] - 1; c >= inner_[r]; --c) cells_.push_back({r, static_cast<std::size_t>(c)});
    }
    content_.assign(nu_.size() + 1, 0);
  }

  std::uint64_t run() {
    if (limit_ == 0) return 0;
    place(0);
    return found_;
  }

 private:
  struct Cell {
    std::size_t row;
    std::size_t col;
  };

  void place(std::size_t k) {
    if (found_ >= limit_) return;
    if (k == cells_.size()) {
      ++found_;
      return;
    }
    const auto [r, c] = cells_[k];
    int hi = static_cast<int>(nu_.size());
    if (c + 1 < static_cast<std::size_t>(lambda_[r])) hi = std::min(hi, grid_[r][c + 1]);
    int lo = 1;
    if (r > 0 && static_cast<int>(c) >= inner_[r - 1]) lo = grid_[r - 1][c] + 1;
    // A letter v can sit in row r only if v <= r+1 for a lattice word.
    hi = std::min(hi, static_cast<int>(r) + 1);
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (content_[vi] >= nu_[vi - 1]) continue;
      if (v > 1 && content_[vi] >= content_[vi - 1]) continue;
      ++content_[vi];
      grid_[r][c] = v;
      place(k + 1);
      --content_[vi];
      if (found_ >= limit_) return;
    }
    grid_[r][c] = 0;
  }

  std::vector<int> lambda_;
  std::vector<int> inner_;
  std::uint64_t limit_;
  std::vector<int> nu_;
  std::vector<std::vector<int>> grid_;
  std::vector<Cell> cells_;
  std::vector<int> content_;
  std::uint64_t found_ = 0;
};

bool trivially_zero(const LRQuery& q) {
  return q.lambda.weight() != q.mu.weight() + q.nu.weight() || !q.mu.contained_in(q.lambda) ||
         !q.nu.contained_in(q.lambda);
}

struct KeyHash {
  std::size_t operator()(const std::vector<int>& key) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : key) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Memo entry: `count` tableaux were found; `exact` when the search ran to completion.
struct MemoEntry {
  std::uint64_t count;
  bool exact;
};

class LRMemo {
 public:
  static LRMemo& instance() {
    static LRMemo memo;
    return memo;
  }

  std::uint64_t lookup_or_count(const LRQuery& q, std::uint64_t limit) {
    const auto key = make_key(q);
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) {
        if (it->second.exact || it->second.count >= limit) return std::min(it->second.count, limit);
      }
    }
    const std::uint64_t count = LRTableauCounter(q, limit).run();
    const MemoEntry entry{count, count < limit};
    std::unique_lock lock(mutex_);
    auto& slot = table_[key];
    if (entry.exact || entry.count > slot.count) slot = entry;
    return count;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  std::size_t size() {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  static std::vector<int> make_key(const LRQuery& q) {
    std::vector<int> key;
    for (const Partition* p : {&q.lambda, &q.mu, &q.nu}) {
      key.insert(key.end(), p->parts().begin(), p->parts().end());
      key.push_back(-1);
    }
    return key;
  }

  std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, MemoEntry, KeyHash> table_;
};

constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

// Semistandard tableaux of shape λ with entries in [1, n], aggregated by content.
std::map<std::vector<int>, std::uint64_t> ssyt_contents(const Partition& shape, int n,
                                                        const OracleLimits& limits) {
  std::map<std::vector<int>, std::uint64_t> out;
  const auto& rows = shape.parts();
  std::vector<std::vector<int>> grid(rows.size());
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    grid[r].assign(static_cast<std::size_t>(rows[r]), 0);
    for (std::size_t c = 0; c < static_cast<std::size_t>(rows[r]); ++c) cells.emplace_back(r, c);
  }
  std::vector<int> content(static_cast<std::size_t>(n), 0);
  const Partition columns = shape.conjugate();
  std::size_t visited = 0;

  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      if (++visited > limits.max_tableaux) {
        throw Error(ErrorKind::ResourceLimit, "semistandard tableau enumeration exceeded " +
                                                  std::to_string(limits.max_tableaux));
      }
      auto& slot = out[content];
      slot = checked_add(slot, 1);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
    // Leave room for the strictly increasing entries below in this column.
    const int hi = n - columns[c] + static_cast<int>(r) + 1;
    for (int v = lo; v <= hi; ++v) {
      grid[r][c] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      self(self, k + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(fill, 0);
  return out;
}

bool weakly_decreasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::less<>()) == v.end();
}

}  // namespace

std::uint64_t count_lr_tableaux(const LRQuery& query, std::uint64_t limit) {
  if (trivially_zero(query)) return 0;
  return LRTableauCounter(query, limit).run();
}

std::uint64_t lr_coefficient(const LRQuery& query) {
  if (trivially_zero(query)) return 0;
  return LRMemo::instance().lookup_or_count(query, kUnlimited);
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lr_coefficient(LRQuery{lambda, mu, nu});
}

bool lr_nonzero(const LRQuery& query) {
  if (trivially_zero(query)) return false;
  return LRMemo::instance().lookup_or_count(query, 1) >= 1;
}

bool lr_equals_one(const LRQuery& query) {
  if (trivially_zero(query)) return false;
  return LRMemo::instance().lookup_or_count(query, 2) == 1;
}

void clear_lr_cache() { LRMemo::instance().clear(); }

std::size_t lr_cache_size() { return LRMemo::instance().size(); }

std::map<Partition, std::uint64_t> schur_product_oracle(const Partition& mu, const Partition& nu,
                                                        int num_vars, const OracleLimits& limits) {
  if (num_vars < 1 || static_cast<std::size_t>(num_vars) < mu.length() + nu.length()) {
    throw Error(ErrorKind::InvalidRange, "schur_product_oracle needs num_vars >= length(mu)+length(nu)");
  }
  const auto left = ssyt_contents(mu, num_vars, limits);
  const auto right = ssyt_contents(nu, num_vars, limits);

  // Coefficients of the dominant monomials x^α (α a partition) in s_μ·s_ν.
  std::map<Partition, std::int64_t, std::greater<>> remaining;
  std::vector<int> sum(static_cast<std::size_t>(num_vars));
  for (const auto& [a, ka] : left) {
    for (const auto& [b, kb] : right) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
      if (!weakly_decreasing(sum)) continue;
      remaining[Partition(sum)] += static_cast<std::int64_t>(checked_mul(ka, kb));
    }
  }

  std::map<Partition, std::uint64_t> result;
  while (true) {
    auto top = std::find_if(remaining.begin(), remaining.end(), [](const auto& kv) { return kv.second != 0; });
    if (top == remaining.end()) break;
    const Partition lambda = top->first;
    const std::int64_t coefficient = top->second;
    if (coefficient < 0) throw Error(ErrorKind::ResourceLimit, "negative Schur coefficient: expansion is inconsistent");
    result[lambda] = static_cast<std::uint64_t>(coefficient);
    for (const auto& [content, kostka] : ssyt_contents(lambda, num_vars, limits)) {
      if (!weakly_decreasing(content)) continue;
      remaining[Partition(content)] -= coefficient * static_cast<std::int64_t>(kostka);
    }
  }
  return result;
}

}  // namespace conespec
