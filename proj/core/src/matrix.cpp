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

#include "gme/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gme {
namespace {

inline double conj_scalar(double x) { return x; }
inline Complex conj_scalar(const Complex& x) { return std::conj(x); }

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

template <typename T>
void require_same_shape(const Matrix<T>& a, const Matrix<T>& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = conj_scalar((*this)(r, c));
  return out;
}

template <typename T>
T Matrix<T>::trace() const {
  T sum{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
  return sum;
}

template <typename T>
bool Matrix<T>::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const T& x) { return is_finite(x); });
}

template <typename T>
Matrix<T>& Matrix<T>::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

template <typename T>
Matrix<T>& Matrix<T>::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

template <typename T>
Matrix<T>& Matrix<T>::operator*=(const T& scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: inner dimensions " + std::to_string(a.cols()) +
                                " and " + std::to_string(b.rows()) + " differ");
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

double hermiticity_residual(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

template <typename T>
double max_abs_difference(const Matrix<T>& a, const Matrix<T>& b) {
  require_same_shape(a, b, "max_abs_difference");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, static_cast<double>(std::abs(a.entries()[i] - b.entries()[i])));
  return worst;
}

template class Matrix<double>;
template class Matrix<Complex>;
template Matrix<double> operator*(const Matrix<double>&, const Matrix<double>&);
template Matrix<Complex> operator*(const Matrix<Complex>&, const Matrix<Complex>&);
template double max_abs_difference(const Matrix<double>&, const Matrix<double>&);
template double max_abs_difference(const Matrix<Complex>&, const Matrix<Complex>&);

}  // namespace gme
