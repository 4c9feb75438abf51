// Copyright 2026 The qtrack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra for the small Hermitian matrices (d = 2^n,
// n <= 6) that every learner manipulates. Everything is value-semantic and
// deterministic; randomness comes in only through an explicit Rng.

#ifndef QTRACK_LINALG_HPP_
#define QTRACK_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qtrack/random.hpp"

namespace qtrack {

using Complex = std::complex<double>;

// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  // Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  // Throws DimensionError unless entries.size() == rows * cols, and
  // DomainError on non-finite entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// Max-entry distance; used throughout the tests.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Square matrix equal to its conjugate transpose. Construction re-symmetrizes
// via (M + M^dagger) / 2, so the invariant holds exactly afterwards.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(ComplexMatrix m);

  static HermitianMatrix identity(std::size_t dim);
  static HermitianMatrix zero(std::size_t dim);
  static HermitianMatrix diagonal(std::span<const double> values);
  static HermitianMatrix diagonal(std::initializer_list<double> values);

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return m_(r, c);
  }
  double trace() const noexcept;

  HermitianMatrix& operator+=(const HermitianMatrix& other);
  HermitianMatrix& operator-=(const HermitianMatrix& other);
  HermitianMatrix& operator*=(double scalar) noexcept;
  // this += scalar * other
  HermitianMatrix& add_scaled(double scalar, const HermitianMatrix& other);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) {
    return a += b;
  }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) {
    return a -= b;
  }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  ComplexMatrix m_;
};

// Eigendecomposition of a Hermitian matrix.
struct Spectrum {
  std::vector<double> eigenvalues;  // sorted descending
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]

  double max() const { return eigenvalues.front(); }
  double min() const { return eigenvalues.back(); }
};

// Cyclic Jacobi: at most 100 sweeps, stops once the off-diagonal Frobenius
// norm is below 1e-13 * max(1, ||m||_F). Throws ConvergenceError naming the
// matrix norm and the sweep cap otherwise.
Spectrum hermitian_eig(const HermitianMatrix& m);

// V diag(values) V^dagger.
HermitianMatrix reconstruct(const ComplexMatrix& eigenvectors,
                            std::span<const double> values);
// V diag(f(lambda_i)) V^dagger.
template <typename F>
HermitianMatrix spectral_apply(const Spectrum& spectrum, F&& f) {
  std::vector<double> mapped(spectrum.eigenvalues.size());
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    mapped[i] = f(spectrum.eigenvalues[i]);
  }
  return reconstruct(spectrum.eigenvectors, mapped);
}
// V diag(phases) V^dagger with complex phases (not Hermitian in general).
ComplexMatrix reconstruct_complex(const ComplexMatrix& eigenvectors,
                                  std::span<const Complex> values);

HermitianMatrix mat_exp(const HermitianMatrix& m);
// Throws DomainError if any eigenvalue is <= 1e-14.
HermitianMatrix mat_log(const HermitianMatrix& m);

// Tr(x^dagger y).
Complex trace_inner(const ComplexMatrix& x, const ComplexMatrix& y);
// Real part of Tr(x y) for Hermitian x, y (the imaginary part vanishes).
double trace_inner(const HermitianMatrix& x, const HermitianMatrix& y);

double nuclear_norm(const HermitianMatrix& m);
double spectral_norm(const HermitianMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
// Traces out the second tensor factor of a (keep_dims * trace_dims)-square
// matrix.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t keep_dims,
                            std::size_t trace_dims);

// U M U^dagger, re-symmetrized.
HermitianMatrix conjugate(const ComplexMatrix& u, const HermitianMatrix& m);

// Matrix of i.i.d. standard complex Gaussians (real and imaginary parts each
// of variance 1/2).
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);
// Haar-distributed unitary: Gram-Schmidt QR of a Ginibre matrix with the
// R-diagonal phases fixed positive.
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);
// (G + G^dagger) / 2 for Ginibre G.
HermitianMatrix random_hermitian(std::size_t dim, Rng& rng);
// Hilbert-Schmidt random state G G^dagger / Tr(G G^dagger).
HermitianMatrix random_density(std::size_t dim, Rng& rng);

}  // namespace qtrack

#endif  // QTRACK_LINALG_HPP_
