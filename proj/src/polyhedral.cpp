#include "conespec/polyhedral.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

namespace conespec {

namespace {

std::vector<Rational> as_rational(const std::vector<std::int64_t>& row) {
  return {row.begin(), row.end()};
}

// Farkas multipliers for an implied row; the LP is feasible exactly when the
// minimum over the box is nonnegative.
Certificate find_certificate(const ConeDescription& desc, const std::vector<std::size_t>& rows,
                             const std::vector<std::int64_t>& target, const LpLimits& limits) {
  const auto& eqs = desc.equalities();
  const auto& ineqs = desc.inequalities();
  const std::size_t vars = rows.size() + eqs.size();
  RationalLP lp;
  lp.num_vars = vars;
  lp.objective.assign(vars, Rational(0));
  lp.nonnegative.assign(vars, false);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    lp.nonnegative[k] = true;
    lp.objective[k] = 1;
  }
  for (std::size_t c = 0; c < desc.dimension(); ++c) {
    LpConstraint con{std::vector<Rational>(vars), LpSense::Equal, Rational(target[c])};
    for (std::size_t k = 0; k < rows.size(); ++k) con.coeffs[k] = ineqs[rows[k]].coeffs[c];
    for (std::size_t e = 0; e < eqs.size(); ++e) con.coeffs[rows.size() + e] = eqs[e].coeffs[c];
    lp.constraints.push_back(std::move(con));
  }
  const auto result = lp_solve(lp, limits);
  if (result.status != LpStatus::Optimal) {
    throw Error(ErrorKind::NoConvergence, "implied row has no Farkas certificate");
  }
  Certificate cert;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (!result.point[k].is_zero()) cert.inequalities.emplace_back(rows[k], result.point[k]);
  }
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    if (!result.point[rows.size() + e].is_zero()) cert.equalities.emplace_back(e, result.point[rows.size() + e]);
  }
  return cert;
}

}  // namespace

Implication implies(const ConeDescription& desc, const std::vector<std::size_t>& rows,
                    const std::vector<std::int64_t>& target, const LpLimits& limits) {
  const std::size_t d = desc.dimension();
  if (target.size() != d) throw Error(ErrorKind::DimensionMismatch, "target row has wrong length");
  RationalLP lp;
  lp.num_vars = d;
  lp.objective = as_rational(target);
  for (std::size_t i : rows) {
    lp.constraints.push_back({as_rational(desc.inequalities().at(i).coeffs), LpSense::GreaterEqual, 0});
  }
  for (const auto& eq : desc.equalities()) lp.constraints.push_back({as_rational(eq.coeffs), LpSense::Equal, 0});
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Rational> unit(d);
    unit[c] = 1;
    lp.constraints.push_back({unit, LpSense::LessEqual, 1});
    lp.constraints.push_back({unit, LpSense::GreaterEqual, -1});
  }
  const auto result = lp_solve(lp, limits);
  // The origin is feasible and the box bounds the objective.
  if (result.status != LpStatus::Optimal) throw Error(ErrorKind::NoConvergence, "bounded LP did not solve");
  Implication out;
  out.minimum = result.value;
  out.witness = result.point;
  out.implied = result.value >= 0;
  if (out.implied) out.certificate = find_certificate(desc, rows, target, limits);
  return out;
}

Implication is_redundant(const ConeDescription& desc, std::size_t row_index, const LpLimits& limits) {
  const std::size_t count = desc.inequalities().size();
  if (row_index >= count) throw Error(ErrorKind::InvalidRange, "row index out of range");
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < count; ++i) {
    if (i != row_index) others.push_back(i);
  }
  return implies(desc, others, desc.inequalities()[row_index].coeffs, limits);
}

bool check_certificate(const ConeDescription& desc, const Certificate& cert, const std::vector<std::int64_t>& target) {
  std::vector<Rational> sum(desc.dimension());
  for (const auto& [i, w] : cert.inequalities) {
    if (w < 0 || i >= desc.inequalities().size()) return false;
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += w * desc.inequalities()[i].coeffs[c];
  }
  for (const auto& [e, w] : cert.equalities) {
    if (e >= desc.equalities().size()) return false;
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += w * desc.equalities()[e].coeffs[c];
  }
  for (std::size_t c = 0; c < sum.size(); ++c) {
    if (sum[c] != target[c]) return false;
  }
  return true;
}

MinimizationReport minimize_description(const ConeDescription& desc, const MinimizeOptions& options) {
  const std::size_t count = desc.inequalities().size();
  std::vector<bool> alive(count, true);
  auto alive_except = [&](std::size_t skip) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < count; ++i) {
      if (alive[i] && i != skip) rows.push_back(i);
    }
    return rows;
  };
  for (std::size_t i = 0; i < count; ++i) {
    if (implies(desc, alive_except(i), desc.inequalities()[i].coeffs, options.limits).implied) alive[i] = false;
  }

  // Re-test pass against the frozen survivor set, plus certificates for the
  // dropped rows in terms of the survivors.
  MinimizationReport report;
  for (std::size_t i = 0; i < count; ++i) {
    if (alive[i]) {
      report.kept.push_back(i);
    } else {
      report.dropped.push_back({i, {}});
    }
  }
  const auto kept = report.kept;
  std::vector<int> retest(kept.size(), 0);
  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  const std::size_t jobs = kept.size() + report.dropped.size();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t job; (job = next++) < jobs;) {
        if (job < kept.size()) {
          std::vector<std::size_t> rows;
          for (std::size_t k : kept) {
            if (k != kept[job]) rows.push_back(k);
          }
          retest[job] = implies(desc, rows, desc.inequalities()[kept[job]].coeffs, options.limits).implied ? 1 : 0;
        } else {
          auto& dropped = report.dropped[job - kept.size()];
          dropped.certificate = *implies(desc, kept, desc.inequalities()[dropped.index].coeffs, options.limits).certificate;
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  if (std::find(retest.begin(), retest.end(), 1) != retest.end()) {
    throw Error(ErrorKind::NoConvergence, "minimized description still has a redundant row");
  }
  report.minimized = desc.subset(report.kept);
  return report;
}

ConeComparison cones_equal(const ConeDescription& d1, const ConeDescription& d2, const LpLimits& limits) {
  if (d1.dimension() != d2.dimension()) throw Error(ErrorKind::DimensionMismatch, "cones live in different spaces");
  for (std::size_t b = 0; b < std::min(d1.blocks().size(), d2.blocks().size()); ++b) {
    if (d1.blocks()[b].dim != d2.blocks()[b].dim || d1.blocks().size() != d2.blocks().size()) {
      throw Error(ErrorKind::DimensionMismatch, "cones have different block dimensions");
    }
  }
  auto contained = [&](const ConeDescription& inner, const ConeDescription& outer, bool first) -> ConeComparison {
    std::vector<std::size_t> all(inner.inequalities().size());
    std::iota(all.begin(), all.end(), 0);
    auto test = [&](const std::vector<std::int64_t>& target, const LinearInequality& row) -> std::optional<ConeComparison> {
      auto imp = implies(inner, all, target, limits);
      if (imp.implied) return std::nullopt;
      return ConeComparison{false, imp.witness, first, outer.render(row)};
    };
    for (const auto& row : outer.inequalities()) {
      if (auto r = test(row.coeffs, row)) return *r;
    }
    for (const auto& row : outer.equalities()) {
      if (auto r = test(row.coeffs, row)) return *r;
      std::vector<std::int64_t> negated(row.coeffs);
      for (auto& c : negated) c = -c;
      if (auto r = test(negated, row)) return *r;
    }
    return {};
  };
  if (auto r = contained(d1, d2, true); !r.equal) return r;
  return contained(d2, d1, false);
}

}  // namespace conespec
