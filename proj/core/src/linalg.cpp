// Copyright 2026 The tripartite-gme Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gme/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace gme {
namespace {

inline double conj_scalar(double x) { return x; }
inline Complex conj_scalar(const Complex& x) { return std::conj(x); }
inline double abs2(double x) { return x * x; }
inline double abs2(const Complex& x) { return std::norm(x); }

std::size_t cube_dim(std::size_t local_dim, const ComplexMatrix& m, const char* op) {
  if (local_dim < 1) throw std::invalid_argument(std::string(op) + ": local dimension must be >= 1");
  const std::size_t n = local_dim * local_dim * local_dim;
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument(std::string(op) + ": expected a " + std::to_string(n) + "x" +
                                std::to_string(n) + " operator for local dimension " +
                                std::to_string(local_dim));
  }
  return n;
}

struct Digits {
  std::array<std::size_t, 3> v;
};

inline Digits split(std::size_t index, std::size_t d) {
  return {{index / (d * d), (index / d) % d, index % d}};
}

inline std::size_t join(const Digits& x, std::size_t d) { return (x.v[0] * d + x.v[1]) * d + x.v[2]; }

// Rotation (c, s) zeroing the coupling |g| between diagonal entries a and b
// of a 2x2 Hermitian block.
inline void jacobi_angle(double a, double b, double g, double& c, double& s) {
  const double zeta = (b - a) / (2.0 * g);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  c = 1.0 / std::sqrt(1.0 + t * t);
  s = t * c;
}

HermitianEigen jacobi_eigen(const ComplexMatrix& input, bool want_vectors) {
  if (!input.is_square()) throw std::invalid_argument("hermitian_eigen: matrix is not square");
  if (!input.all_finite()) throw std::invalid_argument("hermitian_eigen: non-finite entry");
  const std::size_t n = input.rows();

  double scale = 1.0;
  for (const auto& x : input.entries()) scale = std::max(scale, std::abs(x));
  const double herm = hermiticity_residual(input);
  if (herm > kHermitianInputTolerance * scale) {
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian (residual " +
                                std::to_string(herm) + ")");
  }

  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix{};

  const double fro = frobenius_norm(a);
  double off = 0.0;
  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
    off = std::sqrt(off);
    if (off <= kJacobiTolerance * fro || off == 0.0) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g < std::numeric_limits<double>::min()) continue;
        const Complex phase = apq / g;
        const Complex phase_c = std::conj(phase);
        double c = 0.0;
        double s = 0.0;
        jacobi_angle(a(p, p).real(), a(q, q).real(), g, c, s);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * phase_c * akq;
          a(k, q) = s * akp + c * phase_c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - s * phase_c * vkq;
            v(k, q) = s * vkp + c * phase_c * vkq;
          }
        }
      }
    }
  }
  if (!converged) {
    throw NonConvergenceError("hermitian_eigen: no convergence after " +
                                  std::to_string(kJacobiMaxSweeps) + " sweeps",
                              off);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigen out;
  out.values.reserve(n);
  for (auto i : order) out.values.push_back(a(i, i).real());
  if (want_vectors) {
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, order[col]);
  }
  return out;
}

}  // namespace

Party party_from_index(int index) {
  if (index < 1 || index > 3) {
    throw std::invalid_argument("subsystem index must be 1, 2 or 3 (got " + std::to_string(index) + ")");
  }
  return static_cast<Party>(index);
}

int party_index(Party p) { return static_cast<int>(p); }

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t local_dim, Party party) {
  const int index = party_index(party_from_index(party_index(party)));
  const std::size_t n = cube_dim(local_dim, m, "partial_transpose");
  const auto k = static_cast<std::size_t>(index - 1);

  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Digits rd = split(r, local_dim);
    for (std::size_t c = 0; c < n; ++c) {
      Digits row = rd;
      Digits col = split(c, local_dim);
      std::swap(row.v[k], col.v[k]);
      out(join(row, local_dim), join(col, local_dim)) = m(r, c);
    }
  }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::size_t local_dim,
                                 const std::array<std::size_t, 3>& perm) {
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<std::size_t, 3>{0, 1, 2}) {
    throw std::invalid_argument("permute_subsystems: not a permutation of {0, 1, 2}");
  }
  const std::size_t n = cube_dim(local_dim, m, "permute_subsystems");
  auto permute = [&](std::size_t index) {
    const Digits in = split(index, local_dim);
    Digits out{};
    for (std::size_t k = 0; k < 3; ++k) out.v[k] = in.v[perm[k]];
    return join(out, local_dim);
  };
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = permute(i);

  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(map[r], map[c]) = m(r, c);
  return out;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) { return jacobi_eigen(m, true); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return jacobi_eigen(m, false).values;
}

template <typename T>
std::vector<double> singular_values(const Matrix<T>& m) {
  if (!m.all_finite()) throw std::invalid_argument("singular_values: non-finite entry");
  if (m.empty()) return {};

  // Orthogonalise the columns of the taller orientation.
  const Matrix<T> w0 = m.cols() > m.rows() ? m.adjoint() : m;
  const std::size_t rows = w0.rows();
  const std::size_t n = w0.cols();
  std::vector<std::vector<T>> cols(n, std::vector<T>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = w0(i, j);

  bool converged = false;
  double worst = 0.0;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    bool rotated = false;
    worst = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        auto& cp = cols[p];
        auto& cq = cols[q];
        double alpha = 0.0;
        double beta = 0.0;
        T gamma{};
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += abs2(cp[k]);
          beta += abs2(cq[k]);
          gamma += conj_scalar(cp[k]) * cq[k];
        }
        const double g = std::abs(gamma);
        if (g < std::numeric_limits<double>::min()) continue;
        const double rel = g / std::sqrt(alpha * beta);
        worst = std::max(worst, rel);
        if (rel <= kJacobiTolerance) continue;
        rotated = true;

        const T phase = gamma / g;
        const T phase_c = conj_scalar(phase);
        double c = 0.0;
        double s = 0.0;
        jacobi_angle(alpha, beta, g, c, s);
        for (std::size_t k = 0; k < rows; ++k) {
          const T xp = cp[k];
          const T xq = cq[k];
          cp[k] = c * xp - s * phase_c * xq;
          cq[k] = s * xp + c * phase_c * xq;
        }
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw NonConvergenceError("singular_values: no convergence after " +
                                  std::to_string(kJacobiMaxSweeps) + " sweeps",
                              worst);
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (const auto& x : cols[j]) sum += abs2(x);
    sigma[j] = std::sqrt(sum);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

template <typename T>
double trace_norm(const Matrix<T>& m) {
  const auto sigma = singular_values(m);
  return std::accumulate(sigma.begin(), sigma.end(), 0.0);
}

double trace_norm_hermitian(const ComplexMatrix& m) {
  double sum = 0.0;
  for (double x : hermitian_eigenvalues(m)) sum += std::abs(x);
  return sum;
}

template <typename T>
double frobenius_norm(const Matrix<T>& m) {
  double sum = 0.0;
  for (const auto& x : m.entries()) sum += abs2(x);
  return std::sqrt(sum);
}

template RealMatrix kron(const RealMatrix&, const RealMatrix&);
template ComplexMatrix kron(const ComplexMatrix&, const ComplexMatrix&);
template std::vector<double> singular_values(const RealMatrix&);
template std::vector<double> singular_values(const ComplexMatrix&);
template double trace_norm(const RealMatrix&);
template double trace_norm(const ComplexMatrix&);
template double frobenius_norm(const RealMatrix&);
template double frobenius_norm(const ComplexMatrix&);

}  // namespace gme
