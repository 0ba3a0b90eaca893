#include "oscls/svm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "oscls/errors.hpp"

namespace oscls {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

// SMO state with a precomputed Gram matrix and cached decision values,
// so pair updates cost O(n) instead of O(n * d).
struct Smo {
  const std::vector<double>& y;
  double c;
  double tol;
  std::size_t n;

  std::vector<double> gram;   // n x n
  std::vector<double> alpha;
  std::vector<double> f;      // decision value w.x_i + b per instance
  double b = 0.0;

  Smo(const std::vector<Spectrum>& x, const std::vector<double>& y_, double c_,
      double tol_)
      : y(y_), c(c_), tol(tol_), n(x.size()), gram(n * n), alpha(n, 0.0),
        f(n, 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        gram[i * n + j] = gram[j * n + i] = dot(x[i], x[j]);
      }
    }
  }

  double k(std::size_t i, std::size_t j) const { return gram[i * n + j]; }
  double error(std::size_t i) const { return f[i] - y[i]; }

  bool violates_kkt(std::size_t i) const {
    const double ye = y[i] * error(i);
    return (ye < -tol && alpha[i] < c) || (ye > tol && alpha[i] > 0.0);
  }

  bool step(std::size_t i, std::size_t j) {
    if (i == j) return false;
    const double e_i = error(i);
    const double e_j = error(j);
    const double ai_old = alpha[i];
    const double aj_old = alpha[j];

    double lo, hi;
    if (y[i] != y[j]) {
      lo = std::max(0.0, aj_old - ai_old);
      hi = std::min(c, c + aj_old - ai_old);
    } else {
      lo = std::max(0.0, ai_old + aj_old - c);
      hi = std::min(c, ai_old + aj_old);
    }
    if (lo >= hi) return false;

    const double eta = 2.0 * k(i, j) - k(i, i) - k(j, j);
    if (eta >= 0.0) return false;

    double aj = aj_old - y[j] * (e_i - e_j) / eta;
    aj = std::clamp(aj, lo, hi);
    if (std::abs(aj - aj_old) < 1e-12) return false;

    const double ai = ai_old + y[i] * y[j] * (aj_old - aj);

    const double b1 = b - e_i - y[i] * (ai - ai_old) * k(i, i) -
                      y[j] * (aj - aj_old) * k(i, j);
    const double b2 = b - e_j - y[i] * (ai - ai_old) * k(i, j) -
                      y[j] * (aj - aj_old) * k(j, j);
    double b_new;
    if (ai > 0.0 && ai < c) {
      b_new = b1;
    } else if (aj > 0.0 && aj < c) {
      b_new = b2;
    } else {
      b_new = 0.5 * (b1 + b2);
    }

    const double di = y[i] * (ai - ai_old);
    const double dj = y[j] * (aj - aj_old);
    const double db = b_new - b;
    for (std::size_t p = 0; p < n; ++p) {
      f[p] += di * k(i, p) + dj * k(j, p) + db;
    }
    alpha[i] = ai;
    alpha[j] = aj;
    b = b_new;
    return true;
  }

  // Second choice: largest |E_i - E_j|, then scan in index order.
  bool optimize_pair(std::size_t i) {
    const double e_i = error(i);
    std::size_t best = n;
    double best_gap = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double gap = std::abs(e_i - error(j));
      if (gap > best_gap) {
        best_gap = gap;
        best = j;
      }
    }
    if (best < n && step(i, best)) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != best && step(i, j)) return true;
    }
    return false;
  }
};

}  // namespace

SvmModel svm_fit(const Dataset& train, const SvmParams& params) {
  if (!(params.c > 0.0) || !(params.tolerance > 0.0) || params.max_passes < 1) {
    throw ArgumentError("svm: invalid parameters");
  }
  const std::size_t n = train.instances.size();
  if (train.target_count() == 0 || train.outlier_count() == 0) {
    throw TrainingError("svm: training set must contain both classes");
  }

  std::vector<Spectrum> x;
  std::vector<double> y;
  x.reserve(n);
  y.reserve(n);
  for (const auto& inst : train.instances) {
    x.push_back(inst.spectrum);
    y.push_back(inst.label == Label::Target ? 1.0 : -1.0);
  }

  Smo smo(x, y, params.c, params.tolerance);

  int quiet_passes = 0;
  // hard cap so a pathological problem cannot spin forever
  const long max_sweeps = 2000;
  for (long sweep = 0; sweep < max_sweeps && quiet_passes < params.max_passes;
       ++sweep) {
    std::size_t changed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (smo.violates_kkt(i) && smo.optimize_pair(i)) {
        ++changed;
      }
    }
    quiet_passes = (changed == 0) ? quiet_passes + 1 : 0;
  }

  SvmModel model;
  // build w from the multipliers so the invariant w = sum a_i y_i x_i
  // holds exactly
  model.weights.assign(train.channel_count ? train.channel_count : x.front().size(),
                       0.0);
  model.bias = smo.b;
  for (std::size_t i = 0; i < n; ++i) {
    if (smo.alpha[i] > 0.0) {
      model.support_alphas.emplace_back(i, smo.alpha[i]);
      for (std::size_t d = 0; d < model.weights.size(); ++d) {
        model.weights[d] += smo.alpha[i] * y[i] * x[i][d];
      }
    }
  }
  return model;
}

std::pair<Label, double> SvmModel::predict(const Spectrum& x) const {
  if (x.size() != weights.size()) {
    throw ShapeError("svm: query has " + std::to_string(x.size()) +
                     " channels, model expects " + std::to_string(weights.size()));
  }
  const double margin = dot(weights, x) + bias;
  return {margin >= 0.0 ? Label::Target : Label::Outlier, margin};
}

}  // namespace oscls
