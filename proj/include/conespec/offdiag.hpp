#pragma once

#include <span>
#include <vector>

#include "conespec/cone.hpp"
#include "conespec/spectrum.hpp"

namespace conespec {

/// ŝ^{p,q} = (s_1, …, s_q, 0, …, 0, -s_q, …, -s_1) of length p+q.
/// Requires s weakly decreasing and non-negative and p >= q = len(s).
template <typename T>
std::vector<T> hat_pq(std::span<const T> s, int p, int q) {
  if (q < 0 || static_cast<std::size_t>(q) != s.size()) {
    throw Error(ErrorKind::DimensionMismatch, "hat_pq: s must have length q");
  }
  if (p < q) throw Error(ErrorKind::InvalidRange, "hat_pq needs p >= q");
  require_decreasing(s, "s");
  require_nonnegative(s, "s");
  std::vector<T> out(static_cast<std::size_t>(p + q), T(0));
  for (std::size_t k = 0; k < s.size(); ++k) {
    out[k] = s[k];
    out[out.size() - 1 - k] = -s[k];
  }
  return out;
}

/// λ* = (-λ_n, …, -λ_1).
template <typename T>
std::vector<T> star(std::span<const T> lambda) {
  require_decreasing(lambda, "lambda");
  std::vector<T> out;
  out.reserve(lambda.size());
  for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) out.push_back(-*it);
  return out;
}

/// Linear map behind hat_pq, from a block of length q to one of length p+q.
std::vector<std::vector<std::int64_t>> hat_matrix(int p, int q, std::int64_t scale = 1);

enum class AMethod { Fflp, Embed };
/// Direct evaluation of the theorem rows, or pullback of the LR(·,·) cone.
enum class BlockMethod { Direct, Pullback };

/// A(p,q) over blocks λ (n = p+q) and s (q).
/// Fflp: |λ|_I - |λ|_{J^o} ≥ 2|s|_K for (I,J,K) ∈ LR^q_r, r <= q.
/// Embed: Horn(n) pulled back along (λ, λ*, 2ŝ^{p,q}), chamber-implied rows removed.
ConeDescription a_description(int p, int q, AMethod method, bool chamber = false);

/// S(p,q) over blocks γ (n), s (q), t (q).
ConeDescription s_description(int p, int q, BlockMethod method = BlockMethod::Direct, bool chamber = false);

/// T(p,q) over blocks γ (n), s (p), t (q).
ConeDescription t_description(int p, int q, BlockMethod method = BlockMethod::Direct, bool chamber = false);

/// Interlacing rows s_j ≤ γ_j (j ≤ p) and γ_{j+2} ≤ s_j (j ≤ p-1) between the
/// singular values γ of a (p+1)-square matrix and s of a submatrix obtained by
/// deleting one row and one column.
ConeDescription thompson_rows(int p);

/// (λ, s) ∈ A(p,q) with n = len(λ), q = len(s). Embed goes through horn_member.
Verdict a_member(std::span<const Rational> lambda, std::span<const Rational> s, AMethod method);
Verdict a_member(std::span<const double> lambda, std::span<const double> s, AMethod method, double tol);

/// (γ, s, t) ∈ S(p,q), q = len(s) = len(t), p = len(γ) - q.
/// Pullback goes through lrmn_member on (γ̂, ŝ^{p,q}, t̂^{p,q}).
Verdict s_member(std::span<const Rational> gamma, std::span<const Rational> s, std::span<const Rational> t,
                 BlockMethod method = BlockMethod::Direct);
Verdict s_member(std::span<const double> gamma, std::span<const double> s, std::span<const double> t, double tol,
                 BlockMethod method = BlockMethod::Direct);

/// (γ, s, t) ∈ T(p,q), p = len(s) >= q = len(t), len(γ) = p+q.
/// Pullback goes through lrmn_member on (γ̂, ŝ, t̂) in LR(2p, 2q).
Verdict t_member(std::span<const Rational> gamma, std::span<const Rational> s, std::span<const Rational> t,
                 BlockMethod method = BlockMethod::Direct);
Verdict t_member(std::span<const double> gamma, std::span<const double> s, std::span<const double> t, double tol,
                 BlockMethod method = BlockMethod::Direct);

}  // namespace conespec
