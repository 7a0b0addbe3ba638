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

#ifndef GME_LINALG_HPP
#define GME_LINALG_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "gme/errors.hpp"
#include "gme/matrix.hpp"

namespace gme {

// One of the three parties of a tripartite system. Values are the 1-based
// subsystem labels; flat basis index is i1*d^2 + i2*d + i3.
enum class Party : int { first = 1, second = 2, third = 3 };

// Throws std::invalid_argument unless index is 1, 2 or 3.
Party party_from_index(int index);
int party_index(Party p);

// Sweep cap and convergence tolerance for the Jacobi routines.
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiTolerance = 1e-12;
// Hermiticity tolerance accepted by the eigensolver, relative to max(1, max|a_ij|).
inline constexpr double kHermitianInputTolerance = 1e-10;

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b);

// Swaps the row and column digits of one party in a d^3 x d^3 operator.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t local_dim, Party party);

// out(n, n') = m(i, i') where the k-th digit of n is digit perm[k] of i.
// perm holds 0-based party positions, e.g. {1, 0, 2} exchanges parties 1 and 2.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::size_t local_dim,
                                 const std::array<std::size_t, 3>& perm);

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

// Cyclic complex Jacobi. Throws std::invalid_argument for non-Hermitian input
// and NonConvergenceError past the sweep cap.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// One-sided Jacobi; min(rows, cols) values, descending.
template <typename T>
std::vector<double> singular_values(const Matrix<T>& m);

// Sum of singular values.
template <typename T>
double trace_norm(const Matrix<T>& m);

// Sum of |eigenvalues|; requires Hermitian input.
double trace_norm_hermitian(const ComplexMatrix& m);

template <typename T>
double frobenius_norm(const Matrix<T>& m);

}  // namespace gme

#endif  // GME_LINALG_HPP
