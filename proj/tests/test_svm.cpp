#include <doctest.h>

#include <cmath>

#include "oscls/errors.hpp"
#include "oscls/rng.hpp"
#include "oscls/svm.hpp"

#include "helpers.hpp"

using namespace oscls;
using namespace oscls::testing;

namespace {

double dot(const std::vector<double>& a, const Spectrum& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Checks the trained model against the soft-margin KKT conditions and the
/// dual feasibility constraints.
void check_kkt(const SvmModel& model, const Dataset& train, double c,
               double tol) {
  std::vector<double> alpha(train.size(), 0.0);
  double sum_ay = 0.0;
  for (const auto& [idx, a] : model.support_alphas) {
    REQUIRE(idx < train.size());
    alpha[idx] = a;
  }
  for (std::size_t i = 0; i < train.size(); ++i) {
    const double y =
        train.instances[i].label == Label::Target ? 1.0 : -1.0;
    const double margin =
        y * (dot(model.weights, train.instances[i].spectrum) + model.bias);
    CHECK(alpha[i] >= 0.0);
    CHECK(alpha[i] <= c + 1e-12);
    if (alpha[i] < 1e-12) {
      CHECK(margin >= 1.0 - tol);
    } else if (alpha[i] > c - 1e-12) {
      CHECK(margin <= 1.0 + tol);
    } else {
      CHECK(margin == doctest::Approx(1.0).epsilon(tol));
    }
    sum_ay += alpha[i] * y;
  }
  CHECK(std::abs(sum_ay) <= 1e-3);
}

}  // namespace

TEST_CASE("svm separates two clusters with zero training error") {
  SeededRng rng(31);
  for (double c : {1.0, 3.0, 5.0}) {
    const Dataset train = two_cluster_dataset(rng, 25, 25, 8, 0.2, 0.8, 0.1);
    SvmParams p;
    p.c = c;
    const SvmModel model = svm_fit(train, p);
    for (const auto& inst : train.instances) {
      CHECK(model.predict(inst.spectrum).first == inst.label);
    }
    check_kkt(model, train, c, p.tolerance);
  }
}

TEST_CASE("weights equal the support-vector expansion") {
  SeededRng rng(37);
  const Dataset train = two_cluster_dataset(rng, 15, 15, 4, 0.2, 0.8, 0.15);
  const SvmModel model = svm_fit(train, SvmParams{});
  std::vector<double> w(train.channel_count, 0.0);
  for (const auto& [idx, a] : model.support_alphas) {
    const double y =
        train.instances[idx].label == Label::Target ? 1.0 : -1.0;
    for (std::size_t d = 0; d < w.size(); ++d) {
      w[d] += a * y * train.instances[idx].spectrum[d];
    }
  }
  for (std::size_t d = 0; d < w.size(); ++d) {
    CHECK(w[d] == doctest::Approx(model.weights[d]).epsilon(1e-12));
  }
}

TEST_CASE("margin sign decides the label, zero inclusive") {
  SvmModel model;
  model.weights = {1.0, 0.0};
  model.bias = -1.0;
  CHECK(model.predict({1.0, 0.5}).first == Label::Target);   // margin 0
  CHECK(model.predict({2.0, 0.0}).first == Label::Target);   // margin 1
  CHECK(model.predict({0.0, 0.0}).first == Label::Outlier);  // margin -1
  CHECK(model.predict({2.0, 0.0}).second == doctest::Approx(1.0));
}

TEST_CASE("a small perturbation of the query does not flip a confident margin") {
  SeededRng rng(41);
  const Dataset train = two_cluster_dataset(rng, 20, 20, 6, 0.2, 0.8, 0.1);
  const SvmModel model = svm_fit(train, SvmParams{});
  for (int rep = 0; rep < 50; ++rep) {
    Spectrum x = random_spectrum(rng, 6, 0.1, 0.9);
    const auto [label, margin] = model.predict(x);
    if (std::abs(margin) < 0.5) continue;
    for (double& v : x) v += rng.uniform(-1e-6, 1e-6);
    CHECK(model.predict(x).first == label);
  }
}

TEST_CASE("svm argument and precondition errors") {
  SeededRng rng(43);
  const Dataset train = two_cluster_dataset(rng, 5, 5, 4, 0.2, 0.8, 0.1);

  SvmParams p;
  p.c = 0.0;
  CHECK_THROWS_AS(svm_fit(train, p), ArgumentError);
  p = {};
  p.max_passes = 0;
  CHECK_THROWS_AS(svm_fit(train, p), ArgumentError);

  Dataset one_class = make_dataset({
      make_instance({0.1, 0.2}, Label::Target),
      make_instance({0.2, 0.1}, Label::Target),
  });
  CHECK_THROWS_AS(svm_fit(one_class, SvmParams{}), TrainingError);

  const SvmModel model = svm_fit(train, SvmParams{});
  CHECK_THROWS_AS(model.predict({1.0}), ShapeError);
}

TEST_CASE("training is deterministic") {
  SeededRng rng(47);
  const Dataset train = two_cluster_dataset(rng, 20, 20, 6, 0.2, 0.8, 0.2);
  const SvmModel a = svm_fit(train, SvmParams{});
  const SvmModel b = svm_fit(train, SvmParams{});
  CHECK(a.weights == b.weights);
  CHECK(a.bias == b.bias);
  CHECK(a.support_alphas == b.support_alphas);
}
