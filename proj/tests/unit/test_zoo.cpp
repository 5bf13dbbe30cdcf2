// Copyright 2026 The qchan Authors
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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "qchan/bounds.hpp"
#include "qchan/entropy.hpp"
#include "qchan/errors.hpp"
#include "qchan/rng.hpp"
#include "qchan/zoo.hpp"

using namespace qchan;

namespace {

const double kLn2 = std::log(2.0);

ComplexMatrix ginibre(Eigen::Index r, Eigen::Index c, RngStream& rng) {
  ComplexMatrix g(r, c);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = rng.complex_normal();
  return g;
}

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

void expect_cptp(const Channel& ch) {
  EXPECT_TRUE(ch.flags().cp) << ch.label();
  EXPECT_TRUE(ch.flags().tp) << ch.label();
}

}  // namespace

TEST(Zoo, IdentityAndDepolarizing) {
  const Channel id = identity_channel(2);
  EXPECT_LT(max_diff(id.superoperator(), ComplexMatrix::Identity(4, 4)), 1e-15);
  EXPECT_TRUE(id.flags().unital);
  EXPECT_NEAR(map_entropy(id, 1.0), 0.0, 1e-12);
  EXPECT_LT(max_diff(depolarizing(3, 1.0).superoperator(), identity_channel(3).superoperator()), 1e-15);
  EXPECT_LT(max_diff(depolarizing(3, 0.0).superoperator(), completely_depolarizing(3).superoperator()), 1e-15);
  const Spectrum sv = depolarizing(2, 1.0 / 3.0).superoperator_singular_values();
  EXPECT_NEAR(sv.values[0], 1.0, 1e-12);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(sv.values[i], 1.0 / 3.0, 1e-12);
  EXPECT_THROW(depolarizing(2, 1.5), DomainError);
  EXPECT_THROW(identity_channel(1), DomainError);
}

TEST(Zoo, CoarseGraining) {
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 1.0;
  EXPECT_LT(max_diff(coarse_graining(2).superoperator(), expected), 1e-15);
  EXPECT_NEAR(receiver_entropy(coarse_graining(2), 1.0), kLn2, 1e-12);
  ComplexMatrix rho(2, 2);
  rho << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
  const ComplexMatrix out = qchan::apply(coarse_graining(2), rho);
  EXPECT_NEAR(std::abs(out(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(out(0, 0).real(), 0.7, 1e-15);
}

TEST(Zoo, CompleteContractionAndSpontaneousEmission) {
  ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  const Channel se = complete_contraction(ground);
  EXPECT_LT(max_diff(se.superoperator(), spontaneous_emission().superoperator()), 1e-15);
  EXPECT_NEAR(receiver_entropy(se, 1.0), 0.0, 1e-12);
  EXPECT_LT(max_diff(se.choi(), kron(ground, ComplexMatrix::Identity(2, 2))), 1e-15);
  const Channel star = complete_contraction(ComplexMatrix::Identity(3, 3) / 3.0);
  EXPECT_LT(max_diff(star.superoperator(), completely_depolarizing(3).superoperator()), 1e-15);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  EXPECT_THROW(complete_contraction(bad), ValidationError);
}

TEST(Zoo, IntervalChannels) {
  const Channel cd = interval_channel(1.0, 0.0, 0.0, 0.0);
  expect_cptp(cd);
  ComplexMatrix zero = ComplexMatrix::Zero(2, 2), one = ComplexMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  one(1, 1) = 1.0;
  EXPECT_LT(max_diff(qchan::apply(cd, zero), zero), 1e-15);
  EXPECT_LT(max_diff(qchan::apply(cd, one), one), 1e-15);

  const Channel same = interval_channel(0.4, 0.4, 0.3, 0.3);
  const ComplexMatrix xi = qchan::apply(same, zero);
  EXPECT_LT(max_diff(same.superoperator(), complete_contraction(xi).superoperator()), 1e-14);

  RngStream rng(81);
  for (int t = 0; t < 100; ++t) {
    const Channel ch = random_interval_channel(rng);
    expect_cptp(ch);
    for (const auto& r : interval_check(ch)) EXPECT_TRUE(r.satisfied) << r.id << " " << ch.label();
  }
}

TEST(Zoo, PauliChannels) {
  EXPECT_LT(max_diff(pauli_channel(ProbabilityVector({1, 0, 0, 0})).superoperator(),
                     identity_channel(2).superoperator()),
            1e-15);
  EXPECT_LT(max_diff(pauli_channel(ProbabilityVector({0.25, 0.25, 0.25, 0.25})).superoperator(),
                     depolarizing(2, 0.0).superoperator()),
            1e-12);
  RngStream rng(82);
  for (int t = 0; t < 50; ++t) EXPECT_TRUE(random_pauli_channel(rng).flags().unital);
  EXPECT_THROW(pauli_channel(ProbabilityVector({0.5, 0.5})), DimensionError);
}

TEST(Zoo, ReshuffleInvariantFamily) {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  EXPECT_LT(max_diff(reshuffle_invariant({0, 0, 1}, id2).superoperator(), coarse_graining(2).superoperator()), 1e-15);
  EXPECT_LT(max_diff(reshuffle_invariant({1.0 / 3, 1.0 / 3, 1.0 / 3}, id2).superoperator(),
                     depolarizing(2, 1.0 / 3.0).superoperator()),
            1e-12);
  RngStream rng(83);
  for (int t = 0; t < 200; ++t) {
    const Channel ch = random_reshuffle_invariant(rng);
    expect_cptp(ch);
    EXPECT_LT(max_diff(ch.choi(), ch.superoperator()), 1e-10);
    EXPECT_NEAR(map_entropy(ch, 2.0), receiver_entropy(ch, 2.0), 1e-10);
  }
  EXPECT_THROW(reshuffle_invariant({0.5, 0.6, -0.1}, id2), DomainError);
  EXPECT_THROW(reshuffle_invariant({0.5, 0.6, 0.1}, id2), DomainError);
  EXPECT_THROW(reshuffle_invariant({1.0 / 3, 1.0 / 3, 1.0 / 3}, 2.0 * id2), ValidationError);
}

TEST(Zoo, CurveAbMatchesDepolarizing) {
  for (int i = 0; i <= 100; ++i) {
    const double a = i / 100.0;
    const CurvePoint p = curve_ab_point(a);
    const Channel ch = depolarizing(2, a);
    EXPECT_NEAR(p.s_map, map_entropy(ch, 1.0), 1e-10) << a;
    EXPECT_NEAR(p.s_rec, receiver_entropy(ch, 1.0), 1e-10) << a;
  }
  EXPECT_NEAR(curve_ab_point(0.0).s_map, 2 * kLn2, 1e-12);
  EXPECT_NEAR(curve_ab_point(0.0).s_rec, 0.0, 1e-12);
  EXPECT_NEAR(curve_ab_point(1.0).s_map, 0.0, 1e-12);
  EXPECT_NEAR(curve_ab_point(1.0).s_rec, 2 * kLn2, 1e-12);
  EXPECT_THROW(curve_ab_point(-0.1), DomainError);
}

TEST(Sampling, HaarUnitary) {
  RngStream rng(84);
  for (std::size_t n : {1u, 2u, 5u}) {
    const ComplexMatrix u = haar_unitary(n, rng);
    EXPECT_LT(max_diff(u.adjoint() * u, ComplexMatrix::Identity(n, n)), 1e-12);
  }
  RngStream a(5), b(5);
  EXPECT_EQ(max_diff(haar_unitary(3, a), haar_unitary(3, b)), 0.0);
}

TEST(Sampling, HaarEigenphasesUniform) {
  RngStream rng(85);
  constexpr int kBins = 20;
  std::array<double, kBins> counts{};
  int total = 0;
  for (int t = 0; t < 10000; ++t) {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(haar_unitary(2, rng));
    for (Eigen::Index i = 0; i < 2; ++i) {
      const double theta = std::arg(es.eigenvalues()(i)) + std::numbers::pi;
      counts[std::min(kBins - 1, static_cast<int>(theta / (2 * std::numbers::pi) * kBins))] += 1;
      ++total;
    }
  }
  const double expected = static_cast<double>(total) / kBins;
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 43.82);  // chi-square 0.999 quantile, 19 degrees of freedom
}

TEST(Sampling, RandomDensity) {
  RngStream rng(86);
  double purity = 0.0;
  const int samples = 10000;
  for (int t = 0; t < samples; ++t) {
    const ComplexMatrix rho = random_density(2, rng);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(rho).smallest(), -1e-12);
    purity += (rho * rho).trace().real();
  }
  purity /= samples;
  EXPECT_NEAR(purity, 0.8, 0.8 * 0.02);
  const ComplexMatrix pure = random_pure_state(3, rng);
  EXPECT_NEAR((pure * pure).trace().real(), 1.0, 1e-12);
}

TEST(Sampling, RandomChannels) {
  RngStream rng(87);
  const Channel unitary = random_cptp(2, 1, rng);
  expect_cptp(unitary);
  EXPECT_NEAR(map_entropy(unitary, 1.0), 0.0, 1e-10);
  const Channel generic = random_cptp(2, 4, rng);
  EXPECT_EQ(count_above(generic.choi_eigenvalues(), 1e-10), 4u);
  for (int t = 0; t < 50; ++t) {
    const Channel b = random_bistochastic(2 + t % 3, 1 + t % 4, rng);
    expect_cptp(b);
    EXPECT_TRUE(b.flags().unital);
    const std::size_t n = b.dim();
    EXPECT_LT(max_diff(b.output_of_maximally_mixed(), ComplexMatrix::Identity(n, n) / double(n)), 1e-12);
    EXPECT_NEAR(sigma1(b), 1.0, 1e-9);
  }
  RngStream a(9), c(9);
  EXPECT_EQ(max_diff(random_cptp(3, 2, a).superoperator(), random_cptp(3, 2, c).superoperator()), 0.0);
  EXPECT_THROW(random_cptp(2, 5, rng), DomainError);
  EXPECT_THROW(random_bistochastic(2, 0, rng), DomainError);
}

TEST(Reshuffle, ConjugationIdentity) {
  RngStream rng(88);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index n = 2 + t % 2;
    const ComplexMatrix x1 = ginibre(n, n, rng), x2 = ginibre(n, n, rng);
    const ComplexMatrix x3 = ginibre(n, n, rng), x4 = ginibre(n, n, rng);
    const ComplexMatrix y = ginibre(n * n, n * n, rng);
    const std::size_t un = static_cast<std::size_t>(n);
    const ComplexMatrix lhs = reshuffle(kron(x1, x2) * y * kron(x3, x4), un);
    const ComplexMatrix rhs = kron(x1, x3.transpose()) * reshuffle(y, un) * kron(x2.transpose(), x4);
    EXPECT_LT(max_diff(lhs, rhs), 1e-12 * std::max(1.0, lhs.cwiseAbs().maxCoeff()));
  }
}

TEST(Zoo, EveryFamilyIsValid) {
  ComplexMatrix xi = ComplexMatrix::Identity(2, 2) / 2.0;
  for (const Channel& ch : {identity_channel(2), completely_depolarizing(4), depolarizing(3, 0.2),
                            coarse_graining(3), complete_contraction(xi), spontaneous_emission(),
                            interval_channel(0.3, 0.8, 0.1, 0.2)})
    expect_cptp(ch);
  EXPECT_EQ(family_names().size(), 10u);
}
