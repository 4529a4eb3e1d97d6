#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "conespec/error.hpp"

namespace conespec {

using Complex = std::complex<double>;

/// Dense row-major complex matrix with finite entries.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws InvalidRange on a size mismatch or a non-finite entry.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  static ComplexMatrix real(std::size_t rows, std::size_t cols, const std::vector<double>& data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Complex>& data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& block);
  double frobenius_norm() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Square matrix with H(i,j) = conj(H(j,i)) exactly; the constructor replaces
/// its argument A by (A + A*)/2.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& a);

  std::size_t size() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is below tolerance·‖H‖_F.
  double tolerance = 1e-13;
  int max_sweeps = 100;
};

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
  int sweeps = 0;
};

/// Cyclic complex Jacobi. Throws NoConvergence after max_sweeps.
EigenSystem eig_hermitian_system(const HermitianMatrix& h, const JacobiOptions& options = {});
/// e(H), descending.
std::vector<double> eig_hermitian(const HermitianMatrix& h, const JacobiOptions& options = {});

/// s(X) of length min(m, n): square roots of the top eigenvalues of X·X*,
/// negative round-off clamped to zero.
std::vector<double> singular_values(const ComplexMatrix& x);

/// Ŷ^{p,q} = [[0, Y], [Y*, 0]] for Y of size p×q.
HermitianMatrix augment(const ComplexMatrix& y);

struct MatrixBlocks {
  ComplexMatrix x11;  // p×p
  ComplexMatrix x12;  // p×q
  ComplexMatrix x21;  // q×p
  ComplexMatrix x22;  // q×q
};

/// Splits an n×n matrix with p+q = n. Throws DimensionMismatch otherwise.
MatrixBlocks blocks(const ComplexMatrix& x, std::size_t p, std::size_t q);
ComplexMatrix assemble(const MatrixBlocks& b);

/// Drops row i and column j (0-based).
ComplexMatrix delete_row_col(const ComplexMatrix& x, std::size_t i, std::size_t j);

/// τ on [2n] as 1-based images: τ(k) = k for k ≤ p, k+q for p < k ≤ n+p,
/// k-n for k > n+p.
std::vector<int> tau_permutation(int p, int q);

/// P with P·e_k = e_{σ(k)} for a 1-based permutation σ.
ComplexMatrix permutation_matrix(const std::vector<int>& sigma);

/// Q = [[0_{p×q}, I_p], [I_q, 0_{q×p}]]; X·Q swaps the two block columns.
ComplexMatrix block_swap(std::size_t p, std::size_t q);

/// Y(t) = [[0, 0, Diag(t)], [0, 0, 0], [Diag(t), 0, 0]] of size p+q
/// (blocks q, p-q, q).
ComplexMatrix y_fixture(const std::vector<double>& t, std::size_t p);

/// Reproducible sampling. Sample i of a run seeded with `seed` draws from the
/// stream `stream_seed(seed, i)`, so samples can be produced in any order or
/// on any thread and still match.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal by Box-Muller.
  double normal();
  /// Standard complex Gaussian: independent N(0, 1/2) real and imaginary parts.
  Complex complex_normal();
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0;
};

/// (G + G*)/2 with G an n×n complex Ginibre matrix.
HermitianMatrix sample_gue(std::size_t n, std::uint64_t seed);
/// m×n matrix of iid standard complex Gaussians.
ComplexMatrix sample_ginibre(std::size_t m, std::size_t n, std::uint64_t seed);
/// Haar-distributed unitary from the QR factorization of a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

}  // namespace conespec
