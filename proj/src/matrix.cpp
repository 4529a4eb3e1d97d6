#include "conespec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace conespec {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw Error(ErrorKind::InvalidRange, "matrix data size mismatch");
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::InvalidRange, "matrix entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::real(std::size_t rows, std::size_t cols, const std::vector<double>& data) {
  return ComplexMatrix(rows, cols, std::vector<Complex>(data.begin(), data.end()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  }
  return out;
}

void ComplexMatrix::set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& block) {
  if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block out of range");
  }
  for (std::size_t i = 0; i < block.rows_; ++i) {
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(row0 + i, col0 + j) = block(i, j);
  }
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return a + Complex(-1.0) * b; }

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.data_) z *= scale;
  return out;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& a) : m_(a.rows(), a.cols()) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "Hermitian matrix must be square");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    m_(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

EigenSystem eig_hermitian_system(const HermitianMatrix& h, const JacobiOptions& options) {
  const std::size_t n = h.size();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();
  int sweeps = 0;
  for (;; ++sweeps) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off += std::norm(a(i, j));
      }
    }
    if (std::sqrt(off) <= options.tolerance * scale) break;
    if (sweeps >= options.max_sweeps) {
      throw Error(ErrorKind::NoConvergence, "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double beta = std::abs(b);
        if (beta == 0) continue;
        const Complex phase_conj = std::conj(b / beta);
        const double zeta = (a(q, q).real() - a(p, p).real()) / (2 * beta);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = t * c;
        // U = diag(1, e^{-iφ}) · [[c, s], [-s, c]] acting on coordinates p, q.
        const Complex u00 = c;
        const Complex u01 = s;
        const Complex u10 = -s * phase_conj;
        const Complex u11 = c * phase_conj;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * u00 + akq * u10;
          a(k, q) = akp * u01 + akq * u11;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * u00 + vkq * u10;
          v(k, q) = vkp * u01 + vkq * u11;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
          a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
        }
        a(p, q) = 0;
        a(q, p) = 0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
  EigenSystem out{{}, ComplexMatrix(n, n), sweeps};
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]).real());
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> eig_hermitian(const HermitianMatrix& h, const JacobiOptions& options) {
  return eig_hermitian_system(h, options).values;
}

std::vector<double> singular_values(const ComplexMatrix& x) {
  const std::size_t len = std::min(x.rows(), x.cols());
  auto eta = eig_hermitian(HermitianMatrix(x * x.adjoint()));
  std::vector<double> out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = std::sqrt(std::max(eta[k], 0.0));
  return out;
}

HermitianMatrix augment(const ComplexMatrix& y) {
  const std::size_t p = y.rows();
  const std::size_t q = y.cols();
  ComplexMatrix out(p + q, p + q);
  out.set_block(0, p, y);
  out.set_block(p, 0, y.adjoint());
  return HermitianMatrix(out);
}

MatrixBlocks blocks(const ComplexMatrix& x, std::size_t p, std::size_t q) {
  if (x.rows() != p + q || x.cols() != p + q) {
    throw Error(ErrorKind::DimensionMismatch, "blocks: matrix is not (p+q)-square");
  }
  return {x.block(0, 0, p, p), x.block(0, p, p, q), x.block(p, 0, q, p), x.block(p, p, q, q)};
}

ComplexMatrix assemble(const MatrixBlocks& b) {
  const std::size_t p = b.x11.rows();
  const std::size_t q = b.x22.rows();
  ComplexMatrix out(p + q, p + q);
  out.set_block(0, 0, b.x11);
  out.set_block(0, p, b.x12);
  out.set_block(p, 0, b.x21);
  out.set_block(p, p, b.x22);
  return out;
}

ComplexMatrix delete_row_col(const ComplexMatrix& x, std::size_t i, std::size_t j) {
  if (i >= x.rows() || j >= x.cols()) throw Error(ErrorKind::DimensionMismatch, "delete_row_col out of range");
  ComplexMatrix out(x.rows() - 1, x.cols() - 1);
  for (std::size_t r = 0, rr = 0; r < x.rows(); ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < x.cols(); ++c) {
      if (c == j) continue;
      out(rr, cc++) = x(r, c);
    }
    ++rr;
  }
  return out;
}

std::vector<int> tau_permutation(int p, int q) {
  if (q < 1 || p < q) throw Error(ErrorKind::InvalidRange, "tau_permutation needs p >= q >= 1");
  const int n = p + q;
  std::vector<int> tau(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= 2 * n; ++k) {
    int image = k;
    if (k > p && k <= n + p) image = k + q;
    if (k > n + p) image = k - n;
    tau[static_cast<std::size_t>(k - 1)] = image;
  }
  return tau;
}

ComplexMatrix permutation_matrix(const std::vector<int>& sigma) {
  const std::size_t n = sigma.size();
  std::vector<bool> hit(n, false);
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const int image = sigma[k];
    if (image < 1 || static_cast<std::size_t>(image) > n || hit[static_cast<std::size_t>(image - 1)]) {
      throw Error(ErrorKind::InvalidRange, "not a permutation");
    }
    hit[static_cast<std::size_t>(image - 1)] = true;
    out(static_cast<std::size_t>(image - 1), k) = 1.0;
  }
  return out;
}

ComplexMatrix block_swap(std::size_t p, std::size_t q) {
  ComplexMatrix out(p + q, p + q);
  out.set_block(0, q, ComplexMatrix::identity(p));
  out.set_block(p, 0, ComplexMatrix::identity(q));
  return out;
}

ComplexMatrix y_fixture(const std::vector<double>& t, std::size_t p) {
  const std::size_t q = t.size();
  if (p < q) throw Error(ErrorKind::InvalidRange, "y_fixture needs p >= len(t)");
  ComplexMatrix out(p + q, p + q);
  out.set_block(0, p, ComplexMatrix::diagonal(t));
  out.set_block(p, 0, ComplexMatrix::diagonal(t));
  return out;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  // SplitMix64 finalizer applied to the seed and the stream index.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return mix(mix(seed) ^ mix(index + 0x632be59bd9b4e019ull));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2, im * std::numbers::sqrt2 / 2};
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

ComplexMatrix sample_ginibre(std::size_t m, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix out(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = rng.complex_normal();
  }
  return out;
}

HermitianMatrix sample_gue(std::size_t n, std::uint64_t seed) {
  const auto g = sample_ginibre(n, n, seed);
  return HermitianMatrix(g);
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  ComplexMatrix q = sample_ginibre(n, n, seed);
  // Modified Gram-Schmidt on the columns; R gets a positive diagonal.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
    }
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

}  // namespace conespec
