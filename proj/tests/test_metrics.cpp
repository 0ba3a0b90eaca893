#include <doctest.h>

#include "oscls/errors.hpp"
#include "oscls/experiment.hpp"
#include "oscls/metrics.hpp"
#include "oscls/rng.hpp"

#include "helpers.hpp"

using namespace oscls;
using namespace oscls::testing;

TEST_CASE("the worked confusion matrix: (tp 5, fn 5, fp 0, tn 10)") {
  ConfusionMatrix cm;
  cm.tp = 5;
  cm.fn = 5;
  cm.fp = 0;
  cm.tn = 10;
  const Metrics m = compute_metrics(cm);
  CHECK(m.error_percent == 25.0);
  REQUIRE(m.sensitivity.has_value());
  REQUIRE(m.specificity.has_value());
  CHECK(*m.sensitivity == 0.5);
  CHECK(*m.specificity == 1.0);
}

TEST_CASE("zero denominators are reported as absent, not 0") {
  ConfusionMatrix no_positives;
  no_positives.fp = 2;
  no_positives.tn = 8;
  const Metrics a = compute_metrics(no_positives);
  CHECK_FALSE(a.sensitivity.has_value());
  CHECK(a.specificity.has_value());

  ConfusionMatrix no_negatives;
  no_negatives.tp = 3;
  no_negatives.fn = 1;
  const Metrics b = compute_metrics(no_negatives);
  CHECK(b.sensitivity.has_value());
  CHECK_FALSE(b.specificity.has_value());

  CHECK_THROWS_AS(compute_metrics(ConfusionMatrix{}), ArgumentError);
}

TEST_CASE("evaluate fills exactly one cell per instance") {
  SeededRng rng(71);
  const Dataset test = two_cluster_dataset(rng, 13, 9, 4, 0.2, 0.8, 0.1);

  // classify by mean intensity: low -> Target (matches the clusters)
  const auto predict = [](const Spectrum& s) {
    double sum = 0.0;
    for (double v : s) sum += v;
    return sum / static_cast<double>(s.size()) < 0.5 ? Label::Target
                                                     : Label::Outlier;
  };
  const ConfusionMatrix cm = evaluate(predict, test);
  CHECK(cm.total() == test.size());
  CHECK(cm.tp + cm.fn == test.target_count());
  CHECK(cm.fp + cm.tn == test.outlier_count());
  CHECK(cm.tp == 13);
  CHECK(cm.tn == 9);
  CHECK(compute_metrics(cm).error_percent == 0.0);

  // the constant classifier lands everything in tp / fp
  const ConfusionMatrix all_t =
      evaluate([](const Spectrum&) { return Label::Target; }, test);
  CHECK(all_t.tp == 13);
  CHECK(all_t.fp == 9);
  CHECK(all_t.fn == 0);
  CHECK(all_t.tn == 0);

  CHECK_THROWS_AS(evaluate(predict, make_dataset({})), ArgumentError);
}

TEST_CASE("table cells format as mean (std dev) with two decimals") {
  CHECK(format_cell(6.4932, 2.0251) == "6.49 (2.03)");
  CHECK(format_cell(0.0, 0.0) == "0.00 (0.00)");
  CHECK(format_cell(28.871, 0.991) == "28.87 (0.99)");
  CHECK(format_cell(100.0, 10.0) == "100.00 (10.00)");
}
