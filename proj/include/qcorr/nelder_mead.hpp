// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace qcorr {

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  long evaluations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimizer (reflection 1, expansion 2,
/// contraction 0.5, shrink 0.5). Terminates when the objective spread
/// over the simplex falls below ftol or after max_iter iterations.
/// Fully deterministic for fixed inputs; the best vertex is never
/// discarded, so the returned value is the best ever evaluated.
template <typename F>
NelderMeadResult nelder_mead(F&& f, std::span<const double> x0, double step,
                             double ftol, int max_iter) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1,
                                       std::vector<double>(x0.begin(), x0.end()));
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;

  NelderMeadResult res;
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    fv[i] = f(std::span<const double>(pts[i]));
    ++res.evaluations;
  }

  std::vector<std::size_t> order(n + 1);
  for (; res.iterations < max_iter; ++res.iterations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front(), worst = order.back();
    const std::size_t second_worst = order[n - 1];

    if (fv[worst] - fv[best] < ftol) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);  // excludes the worst vertex
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[k][d];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto eval = [&](const std::vector<double>& x) {
      ++res.evaluations;
      return f(std::span<const double>(x));
    };
    auto blend = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t d = 0; d < n; ++d)
        x[d] = centroid[d] + t * (pts[worst][d] - centroid[d]);
      return x;
    };

    const std::vector<double> xr = blend(-1.0);
    const double fr = eval(xr);
    if (fr < fv[best]) {
      const std::vector<double> xe = blend(-2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        fv[worst] = fe;
      } else {
        pts[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second_worst]) {
      pts[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    const std::vector<double> xc = blend(fr < fv[worst] ? -0.5 : 0.5);
    const double fc = eval(xc);
    if (fc < std::min(fr, fv[worst])) {
      pts[worst] = xc;
      fv[worst] = fc;
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {  // shrink toward the best vertex
      if (k == best) continue;
      for (std::size_t d = 0; d < n; ++d)
        pts[k][d] = pts[best][d] + 0.5 * (pts[k][d] - pts[best][d]);
      fv[k] = eval(pts[k]);
    }
  }

  const std::size_t best = static_cast<std::size_t>(
      std::min_element(fv.begin(), fv.end()) - fv.begin());
  res.x = pts[best];
  res.value = fv[best];
  return res;
}

}  // namespace qcorr
