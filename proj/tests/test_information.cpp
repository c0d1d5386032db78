// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "qcorr/information.hpp"
#include "qcorr/random_states.hpp"

using namespace qcorr;

namespace {
// -0.8 log2(0.4) - 0.2 log2(0.1), the entropy of {0.4, 0.4, 0.1, 0.1}
constexpr double entropy_06 = 1.7219280948873623;
}  // namespace

TEST_CASE("scalar entropy helpers") {
  CHECK(xlog2x(0.0) == 0.0);
  CHECK(xlog2x(-1e-30) == 0.0);
  CHECK(xlog2x(1.0) == 0.0);
  CHECK(xlog2x(2.0) == 2.0);
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.8) == doctest::Approx(0.7219280948873623).epsilon(1e-14));

  const std::array<double, 4> spectrum{0.4, 0.4, 0.1, 0.1};
  CHECK(entropy_of_spectrum(spectrum) ==
        doctest::Approx(entropy_06).epsilon(1e-14));

  const std::array<double, 2> noisy{1.0 + 5e-11, -5e-11};
  CHECK(entropy_of_spectrum(noisy) == 0.0);
  const std::array<double, 2> bad{1.2, -0.2};
  CHECK_THROWS_AS(entropy_of_spectrum(bad), std::invalid_argument);
}

TEST_CASE("von Neumann entropy") {
  const auto mixed = to_density(BlochState{});
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(2.0).epsilon(1e-12));

  const auto bell = to_density(bell_diagonal({1.0, -1.0, 1.0}));
  CHECK(von_neumann_entropy(bell) == doctest::Approx(0.0).epsilon(1e-12));

  const auto rho = to_density(bell_diagonal({0.6, 0.0, 0.0}));
  CHECK(von_neumann_entropy(rho) == doctest::Approx(entropy_06).epsilon(1e-12));

  CHECK(von_neumann_entropy(0.5 * Matrix2::identity()) ==
        doctest::Approx(1.0).epsilon(1e-12));

  Matrix2 wrong_trace = Matrix2::identity();
  CHECK_THROWS_AS(von_neumann_entropy(wrong_trace), std::invalid_argument);
  Matrix4 indefinite;
  indefinite(0, 0) = 1.3;
  indefinite(1, 1) = -0.3;
  CHECK_THROWS_AS(von_neumann_entropy(indefinite), std::invalid_argument);
}

TEST_CASE("entropy bounds and invariances") {
  StateSampler gen(11);
  for (int n = 0; n < 100; ++n) {
    const auto rho = gen.density();
    const double s = von_neumann_entropy(rho);
    CHECK(s >= 0.0);
    CHECK(s <= 2.0 + 1e-12);

    const Matrix4 u = kron(gen.local_unitary(), gen.local_unitary());
    const Matrix4 rotated = u * rho.matrix() * u.adjoint();
    CHECK(std::abs(von_neumann_entropy(DensityMatrix4::from_matrix(rotated)) -
                   s) < 1e-10);

    const double sa =
        von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::A));
    const double sb =
        von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::B));
    CHECK(sa <= 1.0 + 1e-12);
    CHECK(s <= sa + sb + 1e-10);  // subadditivity
  }
}

TEST_CASE("mutual information") {
  StateSampler gen(12);
  for (int n = 0; n < 50; ++n) {
    // product states carry no correlation
    Matrix2 ga = gen.hermitian2();
    ga = ga * ga;  // positive
    ga *= cplx(1.0 / ga.trace().real());
    Matrix2 gb = gen.hermitian2();
    gb = gb * gb;
    gb *= cplx(1.0 / gb.trace().real());
    const auto product = DensityMatrix4::from_matrix(kron(ga, gb));
    CHECK(mutual_information(product) < 1e-12);
  }

  CHECK(mutual_information(to_density(bell_diagonal({1.0, -1.0, 1.0}))) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mutual_information(to_density(bell_diagonal({0.6, 0.0, 0.0}))) ==
        doctest::Approx(0.2780719051126377).epsilon(1e-12));
}

TEST_CASE("closed-form mutual information") {
  CHECK(bell_mutual_information({0.0, 0.0, 0.0}) == 0.0);
  CHECK(bell_mutual_information({1.0, -1.0, 1.0}) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(bell_mutual_information({0.6, 0.0, 0.0}) ==
        doctest::Approx(0.2780719051126377).epsilon(1e-13));
  CHECK_THROWS_AS(bell_mutual_information({1.0, 1.0, 1.0}), InvalidState);

  // a product of local states needs the induced c3 = a3*b3 cross term
  CHECK(x_mutual_information({0.0, 0.0, 0.5 * 0.2}, 0.5, 0.2) < 1e-12);
  // without it the diagonal distribution is classically correlated
  CHECK(x_mutual_information({0.0, 0.0, 0.0}, 0.5, 0.2) ==
        doctest::Approx(0.010274).epsilon(1e-4));
  CHECK_THROWS_AS(x_mutual_information({0.6, 0.0, 0.0}, 0.0, 0.9),
                  InvalidState);

  StateSampler gen(13);
  for (int n = 0; n < 1000; ++n) {
    const Vec3 c = gen.bell_coefficients();
    CHECK(std::abs(bell_mutual_information(c) -
                   x_mutual_information(c, 0.0, 0.0)) < 1e-13);
    CHECK(std::abs(bell_mutual_information(c) -
                   mutual_information(to_density(bell_diagonal(c)))) < 1e-10);
  }
  for (int n = 0; n < 1000; ++n) {
    const auto p = gen.x_parameters();
    CHECK(std::abs(x_mutual_information(p.c, p.a3, p.b3) -
                   mutual_information(to_density(x_state(p.c, p.a3, p.b3)))) <
          1e-10);
  }
}
