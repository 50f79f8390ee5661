#include <doctest.h>

#include <random>

#include "conflictgrid/errors.hpp"
#include "conflictgrid/quantize.hpp"

using namespace conflictgrid;

namespace {

UtilityField field_of(std::vector<double> values) {
  return UtilityField{"RU", ResourceKind::Gas, std::move(values)};
}

}  // namespace

TEST_CASE("quantize zero field maps to grade 0 everywhere") {
  for (QuantizeMode mode : {QuantizeMode::Linear, QuantizeMode::Quantile}) {
    const GradeField g = quantize(field_of({0.0, 0.0, 0.0}), 6, mode, 1.0);
    CHECK(g.grades == std::vector<int>{0, 0, 0});
  }
}

TEST_CASE("quantize linear endpoints") {
  const GradeField g = quantize(field_of({0.0, 17.5}), 6, QuantizeMode::Linear, 1.0);
  CHECK(g.grades == std::vector<int>{0, 5});
}

TEST_CASE("quantize linear frozen ladder") {
  // floor(6 * v / (10 * (1 + 1e-9))) for v in {0, 2, 4, 6, 8, 10}.
  const GradeField g =
      quantize(field_of({0.0, 2.0, 4.0, 6.0, 8.0, 10.0}), 6, QuantizeMode::Linear, 1.0);
  CHECK(g.grades == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("quantize rejects bad parameters") {
  CHECK_THROWS_AS(quantize(field_of({1.0}), 1, QuantizeMode::Linear, 1.0), ValidationError);
  CHECK_THROWS_AS(quantize(field_of({1.0}), 6, QuantizeMode::Linear, 0.0), ValidationError);
  CHECK_THROWS_AS(quantize(field_of({1.0}), 6, QuantizeMode::Linear, -2.0), ValidationError);
  CHECK_THROWS_AS(quantize(field_of({-1.0}), 6, QuantizeMode::Linear, 1.0), ValidationError);
}

TEST_CASE("quantize quantile pins zeros and tops the maximum") {
  const GradeField g =
      quantize(field_of({0.0, 1.0, 2.0, 3.0, 4.0, 5.0}), 6, QuantizeMode::Quantile, 1.0);
  CHECK(g.grades[0] == 0);
  CHECK(g.grades[5] == 5);
  // equal population over the five positive values
  CHECK(g.grades == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("quantize quantile keeps ties together") {
  const GradeField g =
      quantize(field_of({4.0, 4.0, 4.0, 9.0}), 6, QuantizeMode::Quantile, 1.0);
  CHECK(g.grades[0] == g.grades[1]);
  CHECK(g.grades[1] == g.grades[2]);
  CHECK(g.grades[3] == 5);
}

TEST_CASE("quantize ordinal consistency on random fields") {
  std::mt19937 rng(1331);
  std::uniform_real_distribution<double> mag(0.0, 20.0);
  std::uniform_int_distribution<int> size(1, 40);
  std::uniform_int_distribution<int> grades(2, 9);
  std::bernoulli_distribution sparse(0.3);

  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> values(static_cast<std::size_t>(size(rng)));
    for (double& v : values) v = sparse(rng) ? 0.0 : mag(rng);
    const int n = grades(rng);
    for (QuantizeMode mode : {QuantizeMode::Linear, QuantizeMode::Quantile}) {
      const GradeField g = quantize(field_of(values), n, mode, 2.5);
      for (std::size_t a = 0; a < values.size(); ++a) {
        CHECK(g.grades[a] >= 0);
        CHECK(g.grades[a] <= n - 1);
        if (values[a] == 0.0) CHECK(g.grades[a] == 0);
        for (std::size_t b = 0; b < values.size(); ++b) {
          if (values[a] <= values[b]) CHECK(g.grades[a] <= g.grades[b]);
        }
      }
    }
  }
}

TEST_CASE("quantile grades are invariant under weight rescaling") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> mag(0.0, 20.0);
  std::uniform_real_distribution<double> scale(0.001, 900.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> values(25);
    for (double& v : values) v = mag(rng);
    const double w = scale(rng);
    const GradeField a = quantize(field_of(values), 6, QuantizeMode::Quantile, 1.0);
    const GradeField b = quantize(field_of(values), 6, QuantizeMode::Quantile, w);
    CHECK(a.grades == b.grades);
  }
}
