#include <gtest/gtest.h>

#include <thread>

#include "conespec/combinatorics.hpp"
#include "conespec/lr.hpp"

using namespace conespec;

namespace {

// Every partition with at most `rows` parts, each at most `cols`.
std::vector<Partition> box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int)> grow = [&](int cap) {
    out.emplace_back(parts);
    if (static_cast<int>(parts.size()) == rows) return;
    for (int v = 1; v <= cap; ++v) {
      parts.push_back(v);
      grow(v);
      parts.pop_back();
    }
  };
  grow(cols);
  return out;
}

std::vector<Partition> partitions_of(int weight, int max_part) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> grow = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int v = std::min(left, cap); v >= 1; --v) {
      parts.push_back(v);
      grow(left - v, v);
      parts.pop_back();
    }
  };
  grow(weight, max_part);
  return out;
}

}  // namespace

TEST(LR, Pieri) {
  EXPECT_EQ(lr_coefficient({2}, {1}, {1}), 1u);
  EXPECT_EQ(lr_coefficient({2, 1}, {1}, {1, 1}), 1u);
  EXPECT_EQ(lr_coefficient({3, 1}, {2}, {2}), 1u);
  EXPECT_EQ(lr_coefficient({2, 2}, {1}, {2}), 0u);
}

TEST(LR, KnownValues) {
  EXPECT_EQ(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}), 2u);
  // s21·s21 = s42 + s411 + s33 + 2s321 + s3111 + s222 + s2211.
  for (const Partition& nu : {Partition{4, 2}, Partition{4, 1, 1}, Partition{3, 3}, Partition{3, 1, 1, 1},
                              Partition{2, 2, 2}, Partition{2, 2, 1, 1}}) {
    EXPECT_EQ(lr_coefficient(nu, {2, 1}, {2, 1}), 1u) << nu.to_string();
  }
  EXPECT_EQ(lr_coefficient({5, 1}, {2, 1}, {2, 1}), 0u);
}

TEST(LR, ZeroCases) {
  EXPECT_EQ(lr_coefficient({5}, {1}, {1}), 0u);
  EXPECT_EQ(lr_coefficient({2, 2}, {3}, {1}), 0u);
  EXPECT_FALSE(lr_nonzero({{5}, {1}, {1}}));
}

TEST(LR, Predicates) {
  EXPECT_TRUE(lr_nonzero({{2, 1}, {1}, {1, 1}}));
  EXPECT_TRUE(lr_equals_one({{2, 1}, {1}, {1, 1}}));
  EXPECT_TRUE(lr_nonzero({{3, 2, 1}, {2, 1}, {2, 1}}));
  EXPECT_FALSE(lr_equals_one({{3, 2, 1}, {2, 1}, {2, 1}}));
}

TEST(LR, CountWithLimitStopsEarly) {
  EXPECT_EQ(count_lr_tableaux({{3, 2, 1}, {2, 1}, {2, 1}}, 1), 1u);
  EXPECT_EQ(count_lr_tableaux({{3, 2, 1}, {2, 1}, {2, 1}}, 100), 2u);
}

TEST(LR, EmptyFactor) {
  for (const auto& lambda : box(3, 3)) {
    for (const auto& mu : box(3, 3)) {
      EXPECT_EQ(lr_coefficient(lambda, mu, Partition()), lambda == mu ? 1u : 0u);
    }
  }
}

TEST(LR, Symmetric) {
  for (int w = 0; w <= 8; ++w) {
    for (const auto& lambda : partitions_of(w, w)) {
      for (int a = 0; a <= w; ++a) {
        for (const auto& mu : partitions_of(a, a)) {
          for (const auto& nu : partitions_of(w - a, w - a)) {
            ASSERT_EQ(lr_coefficient(lambda, mu, nu), lr_coefficient(lambda, nu, mu))
                << lambda.to_string() << " " << mu.to_string() << " " << nu.to_string();
          }
        }
      }
    }
  }
}

// Σ_λ c^λ_{μ,ν} f^λ = C(|μ|+|ν|, |μ|) f^μ f^ν with f counting standard tableaux.
TEST(LR, DimensionCount) {
  auto hooks = [](const Partition& p) {
    const auto conj = p.conjugate();
    double f = 1;
    int n = 0;
    for (std::size_t i = 0; i < p.length(); ++i) {
      for (int j = 0; j < p[i]; ++j) {
        ++n;
        f *= n;
        f /= (p[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
      }
    }
    return f;
  };
  for (const auto& mu : box(3, 3)) {
    for (const auto& nu : box(2, 3)) {
      const int w = mu.weight() + nu.weight();
      double total = 0;
      for (const auto& lambda : partitions_of(w, w)) total += lr_coefficient(lambda, mu, nu) * hooks(lambda);
      const double expected = static_cast<double>(binomial(w, mu.weight())) * hooks(mu) * hooks(nu);
      EXPECT_NEAR(total, expected, 1e-6 * expected) << mu.to_string() << " " << nu.to_string();
    }
  }
}

TEST(Oracle, SmallProducts) {
  const auto xy = schur_product_oracle({1}, {1}, 2);
  EXPECT_EQ(xy, (std::map<Partition, std::uint64_t>{{Partition({2}), 1}, {Partition({1, 1}), 1}}));
  EXPECT_EQ(schur_product_oracle({2, 1}, {2, 1}, 6).at(Partition({3, 2, 1})), 2u);
  const auto identity = schur_product_oracle({}, {3, 1}, 2);
  EXPECT_EQ(identity, (std::map<Partition, std::uint64_t>{{Partition({3, 1}), 1}}));
  EXPECT_THROW(schur_product_oracle({1, 1}, {1}, 2), Error);
}

TEST(Oracle, ResourceLimit) {
  try {
    schur_product_oracle({3, 3, 3}, {3, 3, 3}, 6, {100});
    FAIL() << "expected a resource limit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
}

TEST(Oracle, AgreesInThreeByThreeBox) {
  const auto shapes = box(3, 3);
  for (const auto& mu : shapes) {
    for (const auto& nu : shapes) {
      const int vars = std::max<int>(1, static_cast<int>(mu.length() + nu.length()));
      const auto product = schur_product_oracle(mu, nu, vars);
      for (const auto& [lambda, c] : product) ASSERT_EQ(lr_coefficient(lambda, mu, nu), c);
      // Every λ the engine reports must appear in the oracle's expansion.
      for (const auto& lambda : partitions_of(mu.weight() + nu.weight(), mu.weight() + nu.weight())) {
        if (static_cast<int>(lambda.length()) > vars) continue;
        const auto it = product.find(lambda);
        ASSERT_EQ(lr_coefficient(lambda, mu, nu), it == product.end() ? 0u : it->second);
      }
    }
  }
}

TEST(LR, DualityOfSubsetTriples) {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      const auto list = subsets(n, r);
      for (const auto& i : list) {
        for (const auto& j : list) {
          for (const auto& k : list) {
            if (mu(i).weight() + mu(j).weight() != mu(k).weight()) continue;
            const bool direct = lr_nonzero({mu(k), mu(i), mu(j)});
            const auto dual = [](const IndexSubset& s) { return mu(s.reflect().complement()); };
            ASSERT_EQ(direct, lr_nonzero({dual(k), dual(i), dual(j)}));
          }
        }
      }
    }
  }
}

TEST(LR, ConcurrentQueriesAgree) {
  clear_lr_cache();
  const auto shapes = box(3, 3);
  std::vector<std::uint64_t> serial;
  for (const auto& a : shapes) serial.push_back(lr_coefficient({4, 3, 2}, a, {2, 1}));
  clear_lr_cache();
  std::vector<std::vector<std::uint64_t>> parallel(4);
  std::vector<std::thread> pool;
  for (auto& out : parallel) {
    pool.emplace_back([&] {
      for (const auto& a : shapes) out.push_back(lr_coefficient({4, 3, 2}, a, {2, 1}));
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& out : parallel) EXPECT_EQ(out, serial);
  EXPECT_GT(lr_cache_size(), 0u);
}
