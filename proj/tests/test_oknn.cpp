#include <doctest.h>

#include <cmath>
#include <limits>

#include "oscls/errors.hpp"
#include "oscls/oknn.hpp"
#include "oscls/rng.hpp"

#include "helpers.hpp"

using namespace oscls;
using namespace oscls::testing;

TEST_CASE("oknn on the 1-channel set {0, 1, 2}") {
  // Euclidean, m = k = 1. Every stored target's nearest neighbour is 1 away,
  // so d2 = 1 and the rule reduces to: accept iff d1 <= threshold.
  OkNNParams p;
  p.m = 1;
  p.k = 1;
  p.threshold = 1.5;
  p.metric = Metric::Euclidean;
  const auto model = OkNNModel::fit({{0.0}, {1.0}, {2.0}}, p);

  CHECK(model.d2_per_target() == std::vector<double>{1.0, 1.0, 1.0});

  const OkNNDecision near = model.predict({0.4});
  CHECK(near.d1 == doctest::Approx(0.4));
  CHECK(near.d2 == doctest::Approx(1.0));
  CHECK(near.ratio == doctest::Approx(0.4));
  CHECK(near.accepted);

  const OkNNDecision far = model.predict({3.8});
  CHECK(far.d1 == doctest::Approx(1.8));
  CHECK(far.ratio == doctest::Approx(1.8));
  CHECK_FALSE(far.accepted);
}

TEST_CASE("ratio equal to the threshold is accepted") {
  OkNNParams p;
  p.threshold = 1.5;
  p.metric = Metric::Euclidean;
  const auto model = OkNNModel::fit({{0.0}, {1.0}, {2.0}}, p);
  CHECK(model.predict({3.5}).ratio == doctest::Approx(1.5));
  CHECK(model.predict({3.5}).accepted);
  CHECK_FALSE(model.predict({3.5 + 1e-9}).accepted);
}

TEST_CASE("d2 == 0 accepts only an exact match") {
  // duplicated targets make every stored neighbour distance zero
  OkNNParams p;
  p.metric = Metric::Euclidean;
  const auto model = OkNNModel::fit({{1.0, 1.0}, {1.0, 1.0}}, p);
  CHECK(model.predict({1.0, 1.0}).accepted);
  const OkNNDecision off = model.predict({1.0, 1.1});
  CHECK_FALSE(off.accepted);
  CHECK(std::isinf(off.ratio));
}

TEST_CASE("fit preconditions") {
  OkNNParams p;
  p.m = 2;
  p.k = 2;
  p.metric = Metric::Euclidean;
  CHECK_THROWS_AS(OkNNModel::fit({{0.0}, {1.0}}, p), TrainingError);
  CHECK_NOTHROW(OkNNModel::fit({{0.0}, {1.0}, {2.0}}, p));

  OkNNParams bad;
  bad.m = 0;
  CHECK_THROWS_AS(OkNNModel::fit({{0.0}, {1.0}}, bad), ArgumentError);
  bad = {};
  bad.threshold = 0.0;
  CHECK_THROWS_AS(OkNNModel::fit({{0.0}, {1.0}}, bad), ArgumentError);
}

TEST_CASE("query shape is checked") {
  OkNNParams p;
  p.metric = Metric::Euclidean;
  const auto model = OkNNModel::fit({{0.0, 0.0}, {1.0, 1.0}}, p);
  CHECK_THROWS_AS(model.predict({1.0}), ShapeError);
}

TEST_CASE("from_parts reproduces a fitted model without refitting") {
  SeededRng rng(7);
  std::vector<Spectrum> targets;
  for (int i = 0; i < 12; ++i) targets.push_back(random_spectrum(rng, 6, 0.1, 1.0));
  OkNNParams p;
  p.m = 2;
  p.k = 2;
  const auto fitted = OkNNModel::fit(targets, p);
  const auto rebuilt =
      OkNNModel::from_parts(fitted.targets(), fitted.d2_per_target(), p);
  for (int rep = 0; rep < 50; ++rep) {
    const Spectrum x = random_spectrum(rng, 6, 0.1, 1.0);
    const auto a = fitted.predict(x);
    const auto b = rebuilt.predict(x);
    CHECK(a.accepted == b.accepted);
    CHECK(a.d1 == b.d1);
    CHECK(a.d2 == b.d2);
  }
}

TEST_CASE("oknn agrees with the brute-force rule on random problems") {
  SeededRng rng(101);
  for (int rep = 0; rep < 300; ++rep) {
    const int m = 1 + static_cast<int>(rng.below(3));
    const int k = 1 + static_cast<int>(rng.below(3));
    const std::size_t channels = 1 + rng.below(5);
    const std::size_t n =
        static_cast<std::size_t>(std::max(m, k) + 1) + rng.below(15);
    const Metric metric = rng.below(2) == 0 ? Metric::Cosine : Metric::Euclidean;
    const double threshold = 1.0 + 0.5 * static_cast<double>(rng.below(3));

    std::vector<Spectrum> targets;
    for (std::size_t i = 0; i < n; ++i) {
      targets.push_back(random_spectrum(rng, channels, 0.05, 1.0));
    }
    const Spectrum x = random_spectrum(rng, channels, 0.05, 1.0);

    OkNNParams p;
    p.m = m;
    p.k = k;
    p.threshold = threshold;
    p.metric = metric;
    const auto decision = OkNNModel::fit(targets, p).predict(x);
    const auto expected = oknn_oracle(targets, x, m, k, threshold, metric);

    CHECK(decision.accepted == expected.accepted);
    CHECK(std::abs(decision.d1 - expected.d1) <= 1e-12);
    CHECK(std::abs(decision.d2 - expected.d2) <= 1e-12);
  }
}
