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
#include <random>

#include "gme/bloch.hpp"
#include "gme/linalg.hpp"
#include "gme/states.hpp"
#include "support/test_support.hpp"

using namespace gme;
using gme::testing::dense_kron;
using gme::testing::dense_trace_product;

namespace {

// Coefficient by an explicit dense operator; label 0 is the identity.
Complex dense_coefficient(const TripartiteState& s, const GellMannBasis& b, std::size_t a1,
                          std::size_t a2, std::size_t a3) {
  const std::size_t d = s.local_dim();
  const auto op = [&](std::size_t a) { return a == 0 ? ComplexMatrix::identity(d) : b.generator(a); };
  return dense_trace_product(s.rho(), dense_kron(dense_kron(op(a1), op(a2)), op(a3)));
}

double sum_sq(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

TEST(Decompose, MaximallyMixedIsZero) {
  for (std::size_t d : {2u, 3u}) {
    const auto t = decompose(TripartiteState::maximally_mixed(d));
    EXPECT_LT(max_tensor_difference(t, CorrelationTensors::zeros(d)), 1e-15);
  }
}

TEST(Decompose, QubitGhzEntries) {
  const auto t = decompose(ghz(2));
  EXPECT_NEAR(t.t12(0, 0), 1.0, 1e-15);         // sigma_z sigma_z
  EXPECT_NEAR(t.t123(1, 1, 1), 1.0, 1e-15);     // sigma_x sigma_x sigma_x
  EXPECT_NEAR(t.t123(0, 0, 0), 0.0, 1e-15);     // sigma_z sigma_z sigma_z
  for (double x : t.t1) EXPECT_NEAR(x, 0.0, 1e-15);
}

TEST(Decompose, EveryEntryMatchesDenseTrace) {
  std::mt19937_64 rng(31);
  for (std::size_t d : {2u, 3u}) {
    const auto s = gme::testing::random_mixed(d, 2, rng);
    const auto b = build_basis(d);
    const auto t = decompose(s);
    const std::size_t n = t.extent();
    double worst = 0.0;
    double worst_imag = 0.0;
    auto check = [&](double got, std::size_t a1, std::size_t a2, std::size_t a3) {
      const Complex want = dense_coefficient(s, b, a1, a2, a3);
      worst = std::max(worst, std::abs(got - want.real()));
      worst_imag = std::max(worst_imag, std::abs(expectation(s, b, {a1, a2, a3}).imag()));
    };
    for (std::size_t a = 1; a <= n; ++a) {
      check(t.t1[a - 1], a, 0, 0);
      check(t.t2[a - 1], 0, a, 0);
      check(t.t3[a - 1], 0, 0, a);
      for (std::size_t c = 1; c <= n; ++c) {
        check(t.t12(a - 1, c - 1), a, c, 0);
        check(t.t13(a - 1, c - 1), a, 0, c);
        check(t.t23(a - 1, c - 1), 0, a, c);
        for (std::size_t e = 1; e <= n; ++e) check(t.t123(a - 1, c - 1, e - 1), a, c, e);
      }
    }
    EXPECT_LT(worst, 1e-10) << "d=" << d;
    EXPECT_LT(worst_imag, 1e-12) << "d=" << d;
  }
}

TEST(Reconstruct, ZeroTensorsGiveMaximallyMixed) {
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto s = reconstruct(CorrelationTensors::zeros(d));
    EXPECT_LT(max_abs_difference(s.rho(), TripartiteState::maximally_mixed(d).rho()), 1e-16);
  }
}

TEST(Reconstruct, RoundTrip) {
  std::mt19937_64 rng(32);
  for (std::size_t d : {2u, 3u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = gme::testing::random_mixed(d, 1 + trial % 4, rng);
      const auto t = decompose(s);
      const auto back = reconstruct(t);
      EXPECT_LT(frobenius_norm(back.rho() - s.rho()), 1e-10);
      EXPECT_LT(max_tensor_difference(decompose(back), t), 1e-10);
    }
  }
}

TEST(Reconstruct, RejectsInconsistentShapes) {
  auto t = CorrelationTensors::zeros(3);
  t.t2.pop_back();
  EXPECT_THROW(reconstruct(t), std::invalid_argument);
  auto u = CorrelationTensors::zeros(2);
  u.t123 = Tensor3(8);
  EXPECT_THROW(reconstruct(u), std::invalid_argument);
  // Valid shapes but not a density matrix.
  auto v = CorrelationTensors::zeros(2);
  v.t1[0] = 5.0;
  EXPECT_THROW(reconstruct(v), ValidationError);
}

TEST(TensorNorms, Values) {
  const auto zero = tensor_norms(decompose(TripartiteState::maximally_mixed(3)));
  EXPECT_LT(zero.t1, 1e-15);
  EXPECT_LT(zero.t23, 1e-15);
  EXPECT_LT(zero.t123, 1e-15);

  std::mt19937_64 rng(33);
  const Ket single = gme::testing::random_ket(2, rng);
  const Ket pair = gme::testing::random_ket(4, rng);
  const auto product = TripartiteState::from_ket(2, kron(single, pair));
  EXPECT_NEAR(tensor_norms(decompose(product)).t1, 1.0, 1e-12);

  const auto g = ghz(2);
  const auto b = build_basis(2);
  double direct = 0.0;
  for (std::size_t a1 = 1; a1 <= 3; ++a1)
    for (std::size_t a2 = 1; a2 <= 3; ++a2)
      for (std::size_t a3 = 1; a3 <= 3; ++a3) direct += std::norm(dense_coefficient(g, b, a1, a2, a3));
  const auto norms = tensor_norms(decompose(g));
  EXPECT_NEAR(norms.t123 * norms.t123, direct, 1e-12);
  EXPECT_NEAR(direct, 4.0, 1e-12);
}

TEST(BlochProperties, TwoQubitPurityRelation) {
  std::mt19937_64 rng(34);
  const Ket zero = {1.0, 0.0};
  for (int trial = 0; trial < 20; ++trial) {
    const Ket pair = gme::testing::random_ket(4, rng);
    const auto t = decompose(TripartiteState::from_ket(2, kron(zero, pair)));
    const double total = sum_sq(t.t2) + sum_sq(t.t3) + sum_sq(t.t23.entries());
    EXPECT_NEAR(total, 3.0, 1e-9);
  }
}

TEST(BlochProperties, ProductStatesFactorise) {
  std::mt19937_64 rng(35);
  for (std::size_t d : {2u, 3u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Ket single = gme::testing::random_ket(d, rng);
      const Ket pair = gme::testing::random_ket(d * d, rng);
      const auto t = decompose(TripartiteState::from_ket(d, kron(single, pair)));
      const std::size_t n = t.extent();
      double worst = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          worst = std::max(worst, std::abs(t.t12(a, b) - t.t1[a] * t.t2[b]));
          for (std::size_t c = 0; c < n; ++c)
            worst = std::max(worst, std::abs(t.t123(a, b, c) - t.t1[a] * t.t23(b, c)));
        }
      }
      EXPECT_LT(worst, 1e-10);
    }
  }
}

TEST(BlochProperties, NormBoundsOnValidStates) {
  std::mt19937_64 rng(36);
  for (std::size_t d : {2u, 3u}) {
    const double dd = static_cast<double>(d);
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = trial % 2 == 0 ? gme::testing::random_mixed(d, 1, rng)
                                    : gme::testing::random_mixed(d, 3, rng);
      const auto n = tensor_norms(decompose(s));
      for (double v : {n.t1, n.t2, n.t3}) EXPECT_LE(v * v, 2.0 * (dd - 1.0) / dd + 1e-9);
      for (double v : {n.t12, n.t13, n.t23}) EXPECT_LE(v * v, 4.0 * (dd * dd - 1.0) / (dd * dd) + 1e-9);
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = gme::testing::random_mixed(2, 1, rng);
    const auto n = tensor_norms(decompose(s));
    for (double v : {n.t1, n.t2, n.t3}) EXPECT_LE(v, 1.0 + 1e-9);
  }
}
