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

#ifndef SCF_OPTIM_HPP_
#define SCF_OPTIM_HPP_

#include <functional>
#include <vector>

namespace scf {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

struct LocalSearchResult {
  std::vector<double> x;
  double f = 0.0;
  long long evals = 0;
};

struct NelderMeadOptions {
  long long max_evals = 10000;
  double target = 0.0;     // stop once f <= target
  double init_step = 0.5;  // initial simplex edge length
  double f_spread_tol = 1e-14;
};

/// Adaptive-parameter Nelder-Mead simplex minimization.
LocalSearchResult nelder_mead_minimize(const ObjectiveFn& f,
                                       const std::vector<double>& start,
                                       const NelderMeadOptions& opts);

struct LbfgsOptions {
  long long max_evals = 10000;
  double target = 0.0;
  double fd_step = 1e-6;   // central-difference step
  int memory = 10;
  double grad_tol = 1e-12;
};

/// L-BFGS with central finite-difference gradients and backtracking
/// Armijo line search.
LocalSearchResult lbfgs_minimize(const ObjectiveFn& f,
                                 const std::vector<double>& start,
                                 const LbfgsOptions& opts);

}  // namespace scf

#endif  // SCF_OPTIM_HPP_
