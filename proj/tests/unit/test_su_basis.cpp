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

#include <gtest/gtest.h>

#include <cmath>

#include "gme/linalg.hpp"
#include "gme/su_basis.hpp"

using namespace gme;

namespace {

double max_abs(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs_difference(a, b); }

}  // namespace

TEST(SuBasis, QubitIsZXY) {
  const auto b = build_basis(2);
  ASSERT_EQ(b.size(), 3u);
  const ComplexMatrix z(2, 2, {1.0, 0.0, 0.0, -1.0});
  const ComplexMatrix x(2, 2, {0.0, 1.0, 1.0, 0.0});
  const ComplexMatrix y(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
  EXPECT_LT(max_abs(b.generator(1), z), 1e-15);
  EXPECT_EQ(b.generator(2), x);
  EXPECT_EQ(b.generator(3), y);
}

TEST(SuBasis, QutritSecondDiagonal) {
  const auto b = build_basis(3);
  const double s = std::sqrt(1.0 / 3.0);
  const ComplexMatrix expected(3, 3, {s, 0.0, 0.0, 0.0, s, 0.0, 0.0, 0.0, -2.0 * s});
  EXPECT_LT(max_abs(b.generator(2), expected), 1e-15);
}

TEST(SuBasis, HermitianTracelessOrthonormal) {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto b = build_basis(d);
    ASSERT_EQ(b.size(), d * d - 1);
    for (std::size_t a = 1; a <= b.size(); ++a) {
      const auto& la = b.generator(a);
      EXPECT_LT(hermiticity_residual(la), 1e-12);
      EXPECT_LT(std::abs(la.trace()), 1e-12);
      for (std::size_t c = 1; c <= b.size(); ++c) {
        const Complex gram = (la * b.generator(c)).trace();
        EXPECT_LT(std::abs(gram - Complex(a == c ? 2.0 : 0.0)), 1e-12) << "d=" << d << " a=" << a << " c=" << c;
      }
    }
  }
}

TEST(SuBasis, Ranges) {
  EXPECT_EQ(antisym_range(2), (IndexRange{3, 3}));
  EXPECT_EQ(antisym_range(3), (IndexRange{6, 8}));
  EXPECT_EQ(antisym_range(4), (IndexRange{10, 15}));
  EXPECT_EQ(antisym_range(4).size(), 6u);
  for (std::size_t d = 2; d <= 6; ++d) {
    EXPECT_EQ(diagonal_range(d).last + 1, symmetric_range(d).first);
    EXPECT_EQ(symmetric_range(d).last + 1, antisym_range(d).first);
    EXPECT_EQ(antisym_range(d).size(), d * (d - 1) / 2);
    EXPECT_EQ(symmetric_range(d).size(), antisym_range(d).size());
  }
  EXPECT_THROW(antisym_range(1), std::invalid_argument);
  EXPECT_THROW(build_basis(1), std::invalid_argument);
}

TEST(SuBasis, TransposeNegatesExactlyTheAntisymmetricBlock) {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto b = build_basis(d);
    const auto anti = antisym_range(d);
    for (std::size_t a = 1; a <= b.size(); ++a) {
      const auto& g = b.generator(a);
      const auto gt = g.transpose();
      if (anti.contains(a)) {
        EXPECT_EQ(gt, g * Complex(-1.0)) << "d=" << d << " a=" << a;
        EXPECT_EQ(b.kind(a), GeneratorKind::antisymmetric);
      } else {
        EXPECT_EQ(gt, g) << "d=" << d << " a=" << a;
      }
    }
  }
}

TEST(SuBasis, SymmetricAndAntisymmetricSlotsSharePairs) {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto b = build_basis(d);
    const auto sym = symmetric_range(d);
    const auto anti = antisym_range(d);
    std::pair<std::size_t, std::size_t> prev{0, 0};
    for (std::size_t s = 0; s < sym.size(); ++s) {
      const auto p = b.pair(sym.first + s);
      EXPECT_EQ(p, b.pair(anti.first + s));
      EXPECT_LT(p.first, p.second);
      if (s > 0) EXPECT_LT(prev, p);
      prev = p;
    }
  }
  EXPECT_THROW(build_basis(3).pair(1), std::invalid_argument);
  EXPECT_THROW(build_basis(3).generator(0), std::out_of_range);
  EXPECT_THROW(build_basis(3).generator(9), std::out_of_range);
}

TEST(SuBasis, SparseMatchesDense) {
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto b = build_basis(d);
    for (std::size_t a = 1; a <= b.size(); ++a) {
      ComplexMatrix rebuilt(d, d);
      for (const auto& e : b.sparse(a)) rebuilt(e.row, e.col) += e.value;
      EXPECT_EQ(rebuilt, b.generator(a));
    }
  }
}
