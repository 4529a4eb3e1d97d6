#include "conespec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

#include "conespec/horn.hpp"
#include "conespec/lrmn.hpp"
#include "conespec/matrix.hpp"
#include "conespec/offdiag.hpp"

namespace conespec {

namespace {

struct Outcome {
  bool member = true;
  double slack = std::numeric_limits<double>::infinity();
};

Outcome from(const Verdict& v) { return {v.member, v.min_slack}; }

Outcome run_sample(const ConeRequest& r, const ConeDescription* thompson, std::uint64_t seed, double tol) {
  auto at = [&](const char* key) { return static_cast<std::size_t>(r.params.at(key)); };
  switch (r.kind) {
    case ConeKind::Horn: {
      const std::size_t n = at("n");
      const auto x = sample_gue(n, stream_seed(seed, 0));
      const auto y = sample_gue(n, stream_seed(seed, 1));
      const auto ex = eig_hermitian(x);
      const auto ey = eig_hermitian(y);
      const auto ez = eig_hermitian(HermitianMatrix(x.matrix() + y.matrix()));
      return from(horn_member(std::span<const double>(ex), ey, ez, tol));
    }
    case ConeKind::LRmn: {
      const std::size_t m = at("m");
      const std::size_t n = at("n");
      const auto h = sample_gue(m + n, seed);
      const auto b = blocks(h.matrix(), m, n);
      const auto ex = eig_hermitian(h);
      const auto ey = eig_hermitian(HermitianMatrix(b.x11));
      const auto ez = eig_hermitian(HermitianMatrix(b.x22));
      return from(lrmn_member(std::span<const double>(ex), ey, ez, tol));
    }
    case ConeKind::A: {
      const std::size_t p = at("p");
      const std::size_t q = at("q");
      const auto h = sample_gue(p + q, seed);
      const auto lambda = eig_hermitian(h);
      const auto s = singular_values(blocks(h.matrix(), p, q).x12);
      const auto method = r.method == "embed" ? AMethod::Embed : AMethod::Fflp;
      return from(a_member(std::span<const double>(lambda), s, method, tol));
    }
    case ConeKind::S:
    case ConeKind::T: {
      const std::size_t p = at("p");
      const std::size_t q = at("q");
      const auto x = sample_ginibre(p + q, p + q, seed);
      const auto b = blocks(x, p, q);
      const auto gamma = singular_values(x);
      const auto method = r.method == "pullback" ? BlockMethod::Pullback : BlockMethod::Direct;
      if (r.kind == ConeKind::S) {
        const auto s = singular_values(b.x12);
        const auto t = singular_values(b.x21);
        return from(s_member(std::span<const double>(gamma), s, t, tol, method));
      }
      const auto s = singular_values(b.x11);
      const auto t = singular_values(b.x22);
      return from(t_member(std::span<const double>(gamma), s, t, tol, method));
    }
    case ConeKind::Thompson: {
      const std::size_t p = at("p");
      const auto x = sample_ginibre(p + 1, p + 1, seed);
      auto point = singular_values(x);
      const auto s = singular_values(delete_row_col(x, p, p));
      point.insert(point.end(), s.begin(), s.end());
      const auto result = check_point(*thompson, std::span<const double>(point), tol);
      return {result.member, result.min_slack};
    }
  }
  return {};
}

}  // namespace

unsigned workers_from_env() {
  if (const char* env = std::getenv("CONESPEC_WORKERS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= 256) return static_cast<unsigned>(value);
  }
  return 1;
}

HarnessReport run_harness(const HarnessConfig& config) {
  const auto request = normalize(config.cone);
  if (config.samples == 0) throw Error(ErrorKind::InvalidRange, "need at least one sample");
  std::optional<ConeDescription> thompson;
  if (request.kind == ConeKind::Thompson) {
    thompson = thompson_rows(request.params.at("p"));
    thompson->add_chamber_rows();
  }
  std::vector<Outcome> outcomes(config.samples);
  const unsigned workers = std::min<std::size_t>(config.workers == 0 ? workers_from_env() : config.workers,
                                                 config.samples);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i; (i = next++) < config.samples;) {
        outcomes[i] = run_sample(request, thompson ? &*thompson : nullptr, stream_seed(config.seed, i), config.tol);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  HarnessReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    report.min_slack = std::min(report.min_slack, outcomes[i].slack);
    if (outcomes[i].member) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failures.push_back(i);
    }
  }
  return report;
}

}  // namespace conespec
