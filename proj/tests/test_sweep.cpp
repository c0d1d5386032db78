// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qcorr/discord.hpp"
#include "qcorr/information.hpp"
#include "qcorr/sweep.hpp"

using namespace qcorr;

namespace {

SweepSpec asymmetry_spec(int steps) {
  SweepSpec spec;
  spec.family = Family::x_state;
  spec.fixed = {{"c1", 0.6}};
  spec.varied = {{"a3", -0.4, 0.4, steps}, {"b3", -0.4, 0.4, steps}};
  spec.quantity = Quantity::D_AB;
  spec.mode = EvalMode::analytic;
  return spec;
}

}  // namespace

TEST_CASE("grid shape and row-major order") {
  const auto spec = asymmetry_spec(9);
  const auto records = run_sweep(spec);
  REQUIRE(records.size() == 81);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      const auto& rec = records[9 * i + j];
      REQUIRE(rec.params.size() == 2);
      CHECK(rec.params[0] == doctest::Approx(-0.4 + 0.1 * i).epsilon(1e-14));
      CHECK(rec.params[1] == doctest::Approx(-0.4 + 0.1 * j).epsilon(1e-14));
      REQUIRE(rec.value.has_value());
    }

  // zero on the diagonal, symmetric across it
  for (int i = 0; i < 9; ++i) CHECK(*records[9 * i + i].value < 1e-12);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      CHECK(std::abs(*records[9 * i + j].value - *records[9 * j + i].value) <
            1e-12);
}

TEST_CASE("1-D sweep reproduces the Bell-diagonal closed form") {
  SweepSpec spec;
  spec.family = Family::bell_diagonal;
  spec.varied = {{"c1", 0.0, 1.0, 21}};
  spec.quantity = Quantity::C_S;
  spec.mode = EvalMode::analytic;
  const auto records = run_sweep(spec);
  REQUIRE(records.size() == 21);
  for (const auto& rec : records) {
    REQUIRE(rec.value.has_value());
    const double kappa = rec.params[0];
    CHECK(std::abs(*rec.value -
                   (1.0 - binary_entropy(0.5 * (1.0 + kappa)))) < 1e-12);
  }
}

TEST_CASE("invalid grid points become skip markers, never dropped rows") {
  SweepSpec spec;
  spec.family = Family::bell_diagonal;
  spec.fixed = {{"c2", 0.9}};
  spec.varied = {{"c1", 0.0, 1.0, 11}};
  spec.quantity = Quantity::I;
  spec.mode = EvalMode::analytic;
  const auto records = run_sweep(spec);
  REQUIRE(records.size() == 11);
  int valid = 0;
  for (const auto& rec : records) valid += rec.value.has_value() ? 1 : 0;
  CHECK(valid == 2);  // only c1 in {0, 0.1} keeps all eigenvalues nonnegative

  std::ostringstream csv;
  render_csv(spec, records, csv);
  const std::string text = csv.str();
  CHECK(text.starts_with("c1,value\n"));
  std::size_t na_count = 0;
  for (std::size_t pos = text.find(",NA\n"); pos != std::string::npos;
       pos = text.find(",NA\n", pos + 1))
    ++na_count;
  CHECK(na_count == 9);
}

TEST_CASE("CSV output is deterministic") {
  const auto spec = asymmetry_spec(5);
  const auto records = run_sweep(spec);
  std::ostringstream first, second;
  render_csv(spec, records, first);
  render_csv(spec, run_sweep(spec), second);
  CHECK(first.str() == second.str());
  CHECK(first.str().starts_with("a3,b3,value\n"));
}

TEST_CASE("numeric and analytic modes agree where both exist") {
  SweepSpec spec;
  spec.family = Family::bell_diagonal;
  spec.varied = {{"c1", 0.1, 0.7, 4}};
  spec.fixed = {{"c2", 0.05}};
  spec.quantity = Quantity::Q_A;
  spec.mode = EvalMode::analytic;
  const auto analytic = run_sweep(spec);
  spec.mode = EvalMode::numeric;
  const auto numeric = run_sweep(spec);
  REQUIRE(analytic.size() == numeric.size());
  for (std::size_t k = 0; k < analytic.size(); ++k) {
    REQUIRE(analytic[k].value.has_value());
    REQUIRE(numeric[k].value.has_value());
    CHECK(std::abs(*analytic[k].value - *numeric[k].value) < 1e-6);
  }
}

TEST_CASE("spec validation") {
  SweepSpec spec = asymmetry_spec(9);

  spec.varied[0].steps = 1;
  CHECK_THROWS_AS(validate_spec(spec), SweepError);
  spec = asymmetry_spec(9);

  spec.varied[0].min = 0.5;
  spec.varied[0].max = 0.5;
  CHECK_THROWS_AS(validate_spec(spec), SweepError);
  spec = asymmetry_spec(9);

  spec.varied[0].name = "c9";
  CHECK_THROWS_AS(validate_spec(spec), SweepError);
  spec = asymmetry_spec(9);

  spec.fixed["a3"] = 0.1;  // overlaps varied a3
  CHECK_THROWS_AS(validate_spec(spec), SweepError);
  spec = asymmetry_spec(9);

  spec.varied[1].name = "a3";  // duplicate
  CHECK_THROWS_AS(validate_spec(spec), SweepError);
  spec = asymmetry_spec(9);

  spec.family = Family::bell_diagonal;  // a3/b3 not in this family
  CHECK_THROWS_AS(validate_spec(spec), SweepError);

  // no closed form for Q_S with local fields in play
  spec = asymmetry_spec(9);
  spec.quantity = Quantity::Q_S;
  CHECK_THROWS_AS(validate_spec(spec), SweepError);

  SweepSpec bell_qs;
  bell_qs.family = Family::bell_diagonal;
  bell_qs.varied = {{"c1", 0.0, 0.5, 3}};
  bell_qs.quantity = Quantity::Q_S;
  bell_qs.mode = EvalMode::analytic;
  CHECK_NOTHROW(validate_spec(bell_qs));

  SweepSpec x_qs_zero_fields;
  x_qs_zero_fields.family = Family::x_state;
  x_qs_zero_fields.varied = {{"c1", 0.0, 0.5, 3}};
  x_qs_zero_fields.quantity = Quantity::Q_S;
  x_qs_zero_fields.mode = EvalMode::analytic;
  CHECK_NOTHROW(validate_spec(x_qs_zero_fields));
}

TEST_CASE("enum helpers") {
  CHECK(to_string(Quantity::D_AB) == "D_AB");
  CHECK(quantity_from_string("Q_S") == Quantity::Q_S);
  CHECK(!quantity_from_string("nope").has_value());
  CHECK(family_from_string("bell_diagonal") == Family::bell_diagonal);
  CHECK(family_from_string("x_state") == Family::x_state);
  CHECK(!family_from_string("ghz").has_value());
}
