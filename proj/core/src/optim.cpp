// Copyright 2026 The scf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scf/optim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace scf {

namespace {

// Budget-capped evaluator that remembers the best point seen.
class Evaluator {
 public:
  Evaluator(const ObjectiveFn& f, long long max_evals)
      : f_(f), max_evals_(max_evals) {}

  bool exhausted() const { return evals_ >= max_evals_; }
  long long evals() const { return evals_; }
  double best_f() const { return best_f_; }
  const std::vector<double>& best_x() const { return best_x_; }

  // Returns false (and leaves `out` untouched) once the budget is spent.
  bool eval(const std::vector<double>& x, double& out) {
    if (exhausted()) return false;
    ++evals_;
    const double v = f_(x);
    if (best_x_.empty() || v < best_f_) {
      best_f_ = v;
      best_x_ = x;
    }
    out = v;
    return true;
  }

 private:
  const ObjectiveFn& f_;
  long long max_evals_;
  long long evals_ = 0;
  double best_f_ = 0.0;
  std::vector<double> best_x_;
};

LocalSearchResult finish(const Evaluator& ev) {
  LocalSearchResult r;
  r.x = ev.best_x();
  r.f = ev.best_f();
  r.evals = ev.evals();
  return r;
}

}  // namespace

LocalSearchResult nelder_mead_minimize(const ObjectiveFn& f,
                                       const std::vector<double>& start,
                                       const NelderMeadOptions& opts) {
  const std::size_t n = start.size();
  if (n == 0) throw std::invalid_argument("nelder_mead_minimize: empty start point");
  if (opts.max_evals < 1) throw std::invalid_argument("nelder_mead_minimize: no budget");
  Evaluator ev(f, opts.max_evals);

  // adaptive coefficients (scale with dimension)
  const double nd = static_cast<double>(n);
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / nd;
  const double gamma = 0.75 - 1.0 / (2.0 * nd);
  const double delta = 1.0 - 1.0 / nd;

  std::vector<std::vector<double>> simplex(n + 1, start);
  std::vector<double> fv(n + 1, 0.0);
  for (std::size_t i = 1; i <= n; ++i) simplex[i][i - 1] += opts.init_step;
  for (std::size_t i = 0; i <= n; ++i)
    if (!ev.eval(simplex[i], fv[i])) return finish(ev);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);

  while (!ev.exhausted()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order[0], worst = order[n], second = order[n - 1];
    if (fv[best] <= opts.target) break;
    if (fv[worst] - fv[best] < opts.f_spread_tol) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
    }
    for (std::size_t j = 0; j < n; ++j) centroid[j] /= nd;

    for (std::size_t j = 0; j < n; ++j)
      trial[j] = centroid[j] + alpha * (centroid[j] - simplex[worst][j]);
    double f_reflect;
    if (!ev.eval(trial, f_reflect)) break;

    if (f_reflect < fv[best]) {
      for (std::size_t j = 0; j < n; ++j)
        trial2[j] = centroid[j] + beta * (trial[j] - centroid[j]);
      double f_expand;
      if (!ev.eval(trial2, f_expand)) break;
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        fv[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        fv[worst] = f_reflect;
      }
    } else if (f_reflect < fv[second]) {
      simplex[worst] = trial;
      fv[worst] = f_reflect;
    } else {
      const bool outside = f_reflect < fv[worst];
      if (outside) {
        for (std::size_t j = 0; j < n; ++j)
          trial2[j] = centroid[j] + gamma * (trial[j] - centroid[j]);
      } else {
        for (std::size_t j = 0; j < n; ++j)
          trial2[j] = centroid[j] - gamma * (centroid[j] - simplex[worst][j]);
      }
      double f_contract;
      if (!ev.eval(trial2, f_contract)) break;
      if (f_contract < std::min(f_reflect, fv[worst])) {
        simplex[worst] = trial2;
        fv[worst] = f_contract;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t j = 0; j < n; ++j)
            simplex[i][j] = simplex[best][j] + delta * (simplex[i][j] - simplex[best][j]);
          if (!ev.eval(simplex[i], fv[i])) return finish(ev);
        }
      }
    }
  }
  return finish(ev);
}

namespace {

// Central-difference gradient; false if the budget ran out mid-gradient.
bool central_gradient(Evaluator& ev, std::vector<double> x, double h,
                      std::vector<double>& grad) {
  const std::size_t n = x.size();
  grad.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    double fp, fm;
    x[i] = xi + h;
    if (!ev.eval(x, fp)) return false;
    x[i] = xi - h;
    if (!ev.eval(x, fm)) return false;
    x[i] = xi;
    grad[i] = (fp - fm) / (2.0 * h);
  }
  return true;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

LocalSearchResult lbfgs_minimize(const ObjectiveFn& f,
                                 const std::vector<double>& start,
                                 const LbfgsOptions& opts) {
  const std::size_t n = start.size();
  if (n == 0) throw std::invalid_argument("lbfgs_minimize: empty start point");
  if (opts.max_evals < 1) throw std::invalid_argument("lbfgs_minimize: no budget");
  Evaluator ev(f, opts.max_evals);

  std::vector<double> x = start;
  double fx;
  if (!ev.eval(x, fx)) return finish(ev);

  std::vector<double> grad;
  if (!central_gradient(ev, x, opts.fd_step, grad)) return finish(ev);

  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  std::vector<double> direction(n), x_new(n), grad_new;
  bool fresh_restart = true;

  while (!ev.exhausted() && fx > opts.target) {
    const double gnorm = norm(grad);
    if (gnorm < opts.grad_tol) break;

    // two-loop recursion
    direction = grad;
    std::vector<double> alpha_coef(s_hist.size());
    for (std::size_t i = s_hist.size(); i-- > 0;) {
      alpha_coef[i] = rho_hist[i] * dot(s_hist[i], direction);
      for (std::size_t j = 0; j < n; ++j) direction[j] -= alpha_coef[i] * y_hist[i][j];
    }
    if (!s_hist.empty()) {
      const double gamma =
          dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
      for (double& v : direction) v *= gamma;
    }
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = rho_hist[i] * dot(y_hist[i], direction);
      for (std::size_t j = 0; j < n; ++j)
        direction[j] += s_hist[i][j] * (alpha_coef[i] - beta);
    }
    for (double& v : direction) v = -v;

    double dir_deriv = dot(grad, direction);
    if (dir_deriv >= 0.0) {
      // not a descent direction; fall back to steepest descent
      for (std::size_t j = 0; j < n; ++j) direction[j] = -grad[j];
      dir_deriv = -gnorm * gnorm;
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
    }

    // backtracking Armijo line search
    constexpr double c1 = 1e-4;
    double step = fresh_restart ? std::min(1.0, 1.0 / std::max(gnorm, 1e-12)) : 1.0;
    bool accepted = false;
    double f_trial = fx;
    for (int bt = 0; bt < 40 && !ev.exhausted(); ++bt) {
      for (std::size_t j = 0; j < n; ++j) x_new[j] = x[j] + step * direction[j];
      if (!ev.eval(x_new, f_trial)) break;
      if (f_trial <= fx + c1 * step * dir_deriv) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (s_hist.empty()) break;  // stalled even along steepest descent
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      fresh_restart = true;
      continue;
    }
    fresh_restart = false;

    if (!central_gradient(ev, x_new, opts.fd_step, grad_new)) break;

    std::vector<double> s(n), yv(n);
    for (std::size_t j = 0; j < n; ++j) {
      s[j] = x_new[j] - x[j];
      yv[j] = grad_new[j] - grad[j];
    }
    const double sy = dot(s, yv);
    if (sy > 1e-12 * norm(s) * norm(yv)) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(yv));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > opts.memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    x = x_new;
    fx = f_trial;
    grad = grad_new;
  }
  return finish(ev);
}

}  // namespace scf
