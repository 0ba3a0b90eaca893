#include <doctest.h>

#include <cmath>

#include "oscls/distance.hpp"
#include "oscls/errors.hpp"
#include "oscls/rng.hpp"

#include "helpers.hpp"

using namespace oscls;
using namespace oscls::testing;

TEST_CASE("cosine distance on known vectors") {
  CHECK(cosine_distance({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(cosine_distance({1.0, 1.0}, {2.0, 2.0}) == doctest::Approx(0.0));
  CHECK(cosine_distance({1.0, 1.0}, {1.0, 0.0}) ==
        doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)));
  CHECK(cosine_distance({1.0, 0.0}, {-1.0, 0.0}) == doctest::Approx(2.0));
}

TEST_CASE("euclidean distance on known vectors") {
  CHECK(euclidean_distance({0.0, 0.0}, {3.0, 4.0}) == doctest::Approx(5.0));
  CHECK(euclidean_distance({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}) == 0.0);
}

TEST_CASE("distance errors") {
  CHECK_THROWS_AS(euclidean_distance({1.0}, {1.0, 2.0}), ShapeError);
  CHECK_THROWS_AS(cosine_distance({1.0}, {1.0, 2.0}), ShapeError);
  CHECK_THROWS_AS(cosine_distance({0.0, 0.0}, {1.0, 2.0}), DistanceError);
  CHECK_THROWS_AS(cosine_distance({1.0, 2.0}, {0.0, 0.0}), DistanceError);
}

TEST_CASE("metric_distance treats a zero vector as maximally distant") {
  CHECK(metric_distance(Metric::Cosine, {0.0, 0.0}, {1.0, 2.0}) == 2.0);
  CHECK(metric_distance(Metric::Euclidean, {0.0, 0.0}, {3.0, 4.0}) ==
        doctest::Approx(5.0));
}

TEST_CASE("metric parsing") {
  CHECK(parse_metric("cosine") == Metric::Cosine);
  CHECK(parse_metric("euclidean") == Metric::Euclidean);
  CHECK(to_string(Metric::Cosine) == "cosine");
  CHECK(to_string(Metric::Euclidean) == "euclidean");
  CHECK_THROWS_AS(parse_metric("manhattan"), ArgumentError);
}

TEST_CASE("distance properties on random spectra") {
  SeededRng rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    const Spectrum a = random_spectrum(rng, 16, 0.01, 1.0);
    const Spectrum b = random_spectrum(rng, 16, 0.01, 1.0);
    const Spectrum c = random_spectrum(rng, 16, 0.01, 1.0);

    // symmetry, identity, range
    CHECK(cosine_distance(a, b) == doctest::Approx(cosine_distance(b, a)));
    CHECK(euclidean_distance(a, b) ==
          doctest::Approx(euclidean_distance(b, a)));
    CHECK(cosine_distance(a, a) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cosine_distance(a, b) >= 0.0);
    CHECK(cosine_distance(a, b) <= 2.0);

    // euclidean triangle inequality
    CHECK(euclidean_distance(a, c) <=
          euclidean_distance(a, b) + euclidean_distance(b, c) + 1e-12);

    // cosine is scale-invariant
    Spectrum a2 = a;
    for (double& v : a2) v *= 7.5;
    CHECK(cosine_distance(a2, b) == doctest::Approx(cosine_distance(a, b)));
  }
}
