// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "qcorr/linalg.hpp"

using namespace qcorr;

namespace {

// Test-side random Hermitian matrices, independent of StateSampler.
std::mt19937_64 rng(12345);

template <std::size_t N>
Matrix<N> random_hermitian() {
  std::normal_distribution<double> d(0.0, 1.0);
  Matrix<N> g;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) g(i, j) = cplx(d(rng), d(rng));
  return 0.5 * (g + g.adjoint());
}

// Brute-force tensor product used as the oracle for kron.
Matrix4 kron_oracle(const Matrix2& a, const Matrix2& b) {
  Matrix4 r;
  for (std::size_t row = 0; row < 4; ++row)
    for (std::size_t col = 0; col < 4; ++col)
      r(row, col) = a(row / 2, col / 2) * b(row % 2, col % 2);
  return r;
}

// Index-summation oracle for the partial trace.
Matrix2 partial_trace_oracle(const Matrix4& rho, Subsystem keep) {
  Matrix2 r;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) {
      cplx sum = 0.0;
      for (std::size_t s = 0; s < 2; ++s) {
        const std::size_t row = keep == Subsystem::A ? 2 * x + s : 2 * s + x;
        const std::size_t col = keep == Subsystem::A ? 2 * y + s : 2 * s + y;
        sum += rho(row, col);
      }
      r(x, y) = sum;
    }
  return r;
}

Matrix4 bell_diag_matrix(double c1, double c2, double c3) {
  Matrix4 m = kron(pauli(0), pauli(0));
  m += c1 * kron(pauli(1), pauli(1));
  m += c2 * kron(pauli(2), pauli(2));
  m += c3 * kron(pauli(3), pauli(3));
  return 0.25 * m;
}

}  // namespace

TEST_CASE("pauli operators") {
  CHECK(max_abs_diff(pauli(0), Matrix2::identity()) == 0.0);

  Matrix2 z;
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  CHECK(max_abs_diff(pauli(3), z) == 0.0);

  for (int k = 1; k <= 3; ++k) {
    const Matrix2 s = pauli(k);
    CHECK(is_hermitian(s, 0.0));
    CHECK(std::abs(s.trace()) == 0.0);
    CHECK(max_abs_diff(s * s, Matrix2::identity()) == 0.0);
  }

  CHECK_THROWS_AS(pauli(4), std::invalid_argument);
  CHECK_THROWS_AS(pauli(-1), std::invalid_argument);
}

TEST_CASE("kron basics and bilinearity") {
  CHECK(max_abs_diff(kron(pauli(0), pauli(0)), Matrix4::identity()) == 0.0);

  Matrix4 zz;
  zz(0, 0) = 1.0;
  zz(1, 1) = -1.0;
  zz(2, 2) = -1.0;
  zz(3, 3) = 1.0;
  CHECK(max_abs_diff(kron(pauli(3), pauli(3)), zz) == 0.0);

  for (int n = 0; n < 100; ++n) {
    const Matrix2 m = random_hermitian<2>();
    const Matrix2 w = random_hermitian<2>();
    const Matrix4 k = kron(m, w);
    CHECK(max_abs_diff(k, kron_oracle(m, w)) == 0.0);
    CHECK(std::abs(k.trace() - m.trace() * w.trace()) < 1e-12);

    std::normal_distribution<double> d(0.0, 1.0);
    const double alpha = d(rng);
    CHECK(max_abs_diff(kron(alpha * m, w), alpha * kron(m, w)) < 1e-12);
  }
}

TEST_CASE("partial trace") {
  for (int n = 0; n < 100; ++n) {
    const Matrix2 m = random_hermitian<2>();
    const Matrix2 w = random_hermitian<2>();
    const Matrix4 k = kron(m, w);
    CHECK(max_abs_diff(partial_trace(k, Subsystem::A), w.trace() * m) < 1e-12);
    CHECK(max_abs_diff(partial_trace(k, Subsystem::B), m.trace() * w) < 1e-12);
  }

  // maximally entangled state has a maximally mixed marginal
  Matrix4 bell;
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK(max_abs_diff(partial_trace(bell, Subsystem::A),
                     0.5 * Matrix2::identity()) < 1e-15);

  for (int n = 0; n < 100; ++n) {
    const Matrix4 rho = random_hermitian<4>();
    for (Subsystem keep : {Subsystem::A, Subsystem::B}) {
      const Matrix2 red = partial_trace(rho, keep);
      CHECK(max_abs_diff(red, partial_trace_oracle(rho, keep)) == 0.0);
      CHECK(std::abs(red.trace() - rho.trace()) < 1e-12);
    }
  }
}

TEST_CASE("hermitian_eigen on fixed spectra") {
  Matrix4 d;
  d(0, 0) = 0.1;
  d(1, 1) = 0.2;
  d(2, 2) = 0.3;
  d(3, 3) = 0.4;
  const auto ed = hermitian_eigen(d);
  for (int k = 0; k < 4; ++k)
    CHECK(ed.eigenvalues[k] == doctest::Approx(0.1 * (k + 1)).epsilon(1e-12));

  const auto ex = hermitian_eigen(pauli(1));
  CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));

  // Bell-diagonal state with c = (0.6, 0, 0)
  const auto eb = hermitian_eigen(bell_diag_matrix(0.6, 0.0, 0.0));
  const std::array<double, 4> expect{0.1, 0.1, 0.4, 0.4};
  for (int k = 0; k < 4; ++k)
    CHECK(std::abs(eb.eigenvalues[k] - expect[k]) < 1e-12);
}

TEST_CASE("hermitian_eigen certification on random matrices") {
  auto certify = [](const auto& m) {
    const auto ed = hermitian_eigen(m);
    constexpr std::size_t n = std::remove_cvref_t<decltype(m)>::dim;

    double sum = 0.0;
    for (double v : ed.eigenvalues) sum += v;
    CHECK(std::abs(sum - m.trace().real()) < 1e-10);

    for (std::size_t k = 0; k + 1 < n; ++k)
      CHECK(ed.eigenvalues[k] <= ed.eigenvalues[k + 1]);

    // reconstruction V diag(lambda) V^H
    Matrix<n> rec;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          rec(i, j) += ed.eigenvectors(i, k) * ed.eigenvalues[k] *
                       std::conj(ed.eigenvectors(j, k));
    CHECK(max_abs_diff(rec, m) < 1e-9);

    // orthonormal columns
    const Matrix<n> gram = ed.eigenvectors.adjoint() * ed.eigenvectors;
    CHECK(max_abs_diff(gram, Matrix<n>::identity()) < 1e-9);
  };

  for (int n = 0; n < 200; ++n) certify(random_hermitian<4>());
  for (int n = 0; n < 200; ++n) certify(random_hermitian<2>());
}

TEST_CASE("hermitian_eigen is deterministic and rejects non-Hermitian input") {
  const Matrix4 m = random_hermitian<4>();
  const auto e1 = hermitian_eigen(m);
  const auto e2 = hermitian_eigen(m);
  for (int k = 0; k < 4; ++k) CHECK(e1.eigenvalues[k] == e2.eigenvalues[k]);
  CHECK(max_abs_diff(e1.eigenvectors, e2.eigenvectors) == 0.0);

  Matrix4 bad = m;
  bad(0, 1) += cplx(0.0, 1e-6);
  CHECK_THROWS_AS(hermitian_eigen(bad), std::invalid_argument);
}

TEST_CASE("degenerate spectra still certify") {
  // projector with a two-fold degenerate eigenvalue on each level
  const Matrix4 m = bell_diag_matrix(0.6, 0.0, 0.0);
  const auto ed = hermitian_eigen(m);
  Matrix4 rec;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        rec(i, j) += ed.eigenvectors(i, k) * ed.eigenvalues[k] *
                     std::conj(ed.eigenvectors(j, k));
  CHECK(max_abs_diff(rec, m) < 1e-9);
}
