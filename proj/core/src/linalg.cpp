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

#include "qtrack/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "qtrack/error.hpp"

namespace qtrack {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-13;
constexpr double kLogFloor = 1e-14;

std::string Shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void RequireSameShape(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + Shape(a) +
                         " vs " + Shape(b));
  }
}

double OffDiagonalNorm(const ComplexMatrix& a) {
  double sum = 0.0;
  const std::size_t d = a.rows();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) +
                         " entries for shape " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace: non-square " + Shape(*this));
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double sum = 0.0;
  for (const Complex& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  RequireSameShape(*this, other, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  RequireSameShape(*this, other, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) noexcept {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("operator*: cannot multiply " + Shape(a) + " by " +
                         Shape(b));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  RequireSameShape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) {
    throw DimensionError("HermitianMatrix: non-square " + Shape(m_));
  }
  const std::size_t d = m_.rows();
  for (std::size_t r = 0; r < d; ++r) {
    const Complex& diag = m_(r, r);
    if (!std::isfinite(diag.real())) {
      throw DomainError("HermitianMatrix: non-finite entry");
    }
    m_(r, r) = diag.real();
    for (std::size_t c = r + 1; c < d; ++c) {
      const Complex avg = 0.5 * (m_(r, c) + std::conj(m_(c, r)));
      if (!std::isfinite(avg.real()) || !std::isfinite(avg.imag())) {
        throw DomainError("HermitianMatrix: non-finite entry");
      }
      m_(r, c) = avg;
      m_(c, r) = std::conj(avg);
    }
  }
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  return HermitianMatrix(ComplexMatrix::identity(dim));
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
  return HermitianMatrix(ComplexMatrix(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  return HermitianMatrix(ComplexMatrix::diagonal(values));
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

double HermitianMatrix::trace() const noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) sum += m_(i, i).real();
  return sum;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
  m_ += other.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& other) {
  m_ -= other.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double scalar) noexcept {
  m_ *= scalar;
  return *this;
}

HermitianMatrix& HermitianMatrix::add_scaled(double scalar,
                                             const HermitianMatrix& other) {
  RequireSameShape(m_, other.m_, "add_scaled");
  auto dst = m_.entries();
  auto src = other.m_.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += scalar * src[i];
  return *this;
}

// ---------------------------------------------------------------------------
// Eigendecomposition

Spectrum hermitian_eig(const HermitianMatrix& m) {
  const std::size_t d = m.dim();
  ComplexMatrix a = m.matrix();
  ComplexMatrix v = ComplexMatrix::identity(d);
  const double scale = std::max(1.0, a.frobenius_norm());
  const double tolerance = kOffDiagonalTolerance * scale;

  bool converged = d <= 1;
  double off = 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    off = OffDiagonalNorm(a);
    if (off <= tolerance) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const Complex phase = apq / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Real Jacobi rotation on the phase-rotated pair, see Golub & Van Loan
        // section 8.5. t = tan(theta) is chosen with |theta| <= pi/4.
        const double theta = (aqq - app) / (2.0 * r);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex s_phase = s * phase;             // s e^{i phi}
        const Complex s_conj = s * std::conj(phase);   // s e^{-i phi}

        // A <- A G with G = [[c, s e^{i phi}], [-s e^{-i phi}, c]].
        for (std::size_t k = 0; k < d; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s_conj * akq;
          a(k, q) = s_phase * akp + c * akq;
        }
        // A <- G^dagger A.
        for (std::size_t k = 0; k < d; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s_phase * aqk;
          a(q, k) = s_conj * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        for (std::size_t k = 0; k < d; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s_conj * vkq;
          v(k, q) = s_phase * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    off = OffDiagonalNorm(a);
    if (off > tolerance) {
      std::ostringstream msg;
      msg << "hermitian_eig: no convergence after " << kMaxSweeps
          << " sweeps (||M||_F = " << m.matrix().frobenius_norm()
          << ", residual off-diagonal norm = " << off << ")";
      throw ConvergenceError(msg.str());
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });
  Spectrum out;
  out.eigenvalues.resize(d);
  out.eigenvectors = ComplexMatrix(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t k = 0; k < d; ++k) {
      out.eigenvectors(k, j) = v(k, order[j]);
    }
  }
  return out;
}

HermitianMatrix reconstruct(const ComplexMatrix& eigenvectors,
                            std::span<const double> values) {
  const std::size_t d = eigenvectors.rows();
  if (values.size() != eigenvectors.cols()) {
    throw DimensionError("reconstruct: value count does not match eigenvectors");
  }
  ComplexMatrix out(d, d);
  // Upper triangle only; the Hermitian constructor mirrors it.
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r; c < d; ++c) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < values.size(); ++k) {
        sum += values[k] * eigenvectors(r, k) * std::conj(eigenvectors(c, k));
      }
      out(r, c) = sum;
      out(c, r) = std::conj(sum);
    }
  }
  return HermitianMatrix(std::move(out));
}

ComplexMatrix reconstruct_complex(const ComplexMatrix& eigenvectors,
                                  std::span<const Complex> values) {
  const std::size_t d = eigenvectors.rows();
  if (values.size() != eigenvectors.cols()) {
    throw DimensionError("reconstruct_complex: value count mismatch");
  }
  ComplexMatrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < values.size(); ++k) {
        sum += values[k] * eigenvectors(r, k) * std::conj(eigenvectors(c, k));
      }
      out(r, c) = sum;
    }
  }
  return out;
}

HermitianMatrix mat_exp(const HermitianMatrix& m) {
  return spectral_apply(hermitian_eig(m), [](double x) { return std::exp(x); });
}

HermitianMatrix mat_log(const HermitianMatrix& m) {
  const Spectrum spectrum = hermitian_eig(m);
  if (spectrum.eigenvalues.empty() || spectrum.min() <= kLogFloor) {
    std::ostringstream msg;
    msg << "mat_log: smallest eigenvalue "
        << (spectrum.eigenvalues.empty() ? 0.0 : spectrum.min())
        << " is not above " << kLogFloor
        << "; mix the matrix toward the identity first";
    throw DomainError(msg.str());
  }
  return spectral_apply(spectrum, [](double x) { return std::log(x); });
}

// ---------------------------------------------------------------------------
// Norms and products

Complex trace_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  RequireSameShape(x, y, "trace_inner");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < x.entries().size(); ++i) {
    sum += std::conj(x.entries()[i]) * y.entries()[i];
  }
  return sum;
}

double trace_inner(const HermitianMatrix& x, const HermitianMatrix& y) {
  return trace_inner(x.matrix(), y.matrix()).real();
}

double nuclear_norm(const HermitianMatrix& m) {
  const Spectrum spectrum = hermitian_eig(m);
  double sum = 0.0;
  for (double lambda : spectrum.eigenvalues) sum += std::abs(lambda);
  return sum;
}

double spectral_norm(const HermitianMatrix& m) {
  if (m.dim() == 0) return 0.0;
  const Spectrum spectrum = hermitian_eig(m);
  return std::max(std::abs(spectrum.max()), std::abs(spectrum.min()));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t m2 = b.rows();
  const std::size_t n2 = b.cols();
  ComplexMatrix out(a.rows() * m2, a.cols() * n2);
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex aij = a(i1, j1);
      for (std::size_t i2 = 0; i2 < m2; ++i2) {
        for (std::size_t j2 = 0; j2 < n2; ++j2) {
          out(i1 * m2 + i2, j1 * n2 + j2) = aij * b(i2, j2);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t keep_dims,
                            std::size_t trace_dims) {
  const std::size_t d = keep_dims * trace_dims;
  if (m.rows() != d || m.cols() != d) {
    throw DimensionError("partial_trace: matrix " + Shape(m) +
                         " does not factor as " + std::to_string(keep_dims) +
                         " x " + std::to_string(trace_dims));
  }
  ComplexMatrix out(keep_dims, keep_dims);
  for (std::size_t a = 0; a < keep_dims; ++a) {
    for (std::size_t b = 0; b < keep_dims; ++b) {
      Complex sum = 0.0;
      for (std::size_t j = 0; j < trace_dims; ++j) {
        sum += m(a * trace_dims + j, b * trace_dims + j);
      }
      out(a, b) = sum;
    }
  }
  return out;
}

HermitianMatrix conjugate(const ComplexMatrix& u, const HermitianMatrix& m) {
  return HermitianMatrix(u * m.matrix() * u.adjoint());
}

// ---------------------------------------------------------------------------
// Random matrices

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  const double scale = std::sqrt(0.5);
  for (Complex& z : g.entries()) {
    const double re = rng.normal();
    const double im = rng.normal();
    z = Complex(scale * re, scale * im);
  }
  return g;
}

ComplexMatrix haar_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix q = ginibre(dim, dim, rng);
  // Modified Gram-Schmidt with one re-orthogonalization pass. The diagonal of
  // the implied R factor is the (real, positive) column norm, which is the
  // phase convention that makes Q Haar distributed.
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex proj = 0.0;
        for (std::size_t k = 0; k < dim; ++k) proj += std::conj(q(k, i)) * q(k, j);
        for (std::size_t k = 0; k < dim; ++k) q(k, j) -= proj * q(k, i);
      }
    }
    double norm = 0.0;
    for (std::size_t k = 0; k < dim; ++k) norm += std::norm(q(k, j));
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NumericError("haar_unitary: degenerate Ginibre draw");
    for (std::size_t k = 0; k < dim; ++k) q(k, j) /= norm;
  }
  return q;
}

HermitianMatrix random_hermitian(std::size_t dim, Rng& rng) {
  // The Hermitian constructor performs the (G + G^dagger) / 2 average.
  return HermitianMatrix(ginibre(dim, dim, rng));
}

HermitianMatrix random_density(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  HermitianMatrix rho(g * g.adjoint());
  rho *= 1.0 / rho.trace();
  return rho;
}

}  // namespace qtrack
