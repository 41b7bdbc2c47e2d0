// Copyright 2026 The qflip Authors
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

#include "qflip/calibration.hpp"

#include <cmath>
#include <stdexcept>

namespace qflip {

double bob_payoff_at(int n, double J, double T, Averaging avg) {
  const ChainConfig config{n, J, T};
  config.validate();
  const std::vector<Mat> moves = calibration_move_unitaries(config);
  const Vec psi0 = initial_state(config.dim());
  double total = 0.0;
  int count = 0;
  for (int i1 = 0; i1 < 4; ++i1) {
    const Vec after1 = moves[i1] * psi0;
    for (int j = 0; j < 4; ++j) {
      const Vec after2 = moves[j] * after1;
      for (int i2 = 0; i2 < 4; ++i2) {
        if (avg == Averaging::kCorrelated && i2 != i1) continue;
        total += 1.0 - p_alice_of_state(Vec(moves[i2] * after2));
        ++count;
      }
    }
  }
  return total / count;
}

PayoffCurve scan_coupling(double j_min, double j_max, int steps, int n,
                          double T, GridScale scale, Averaging avg) {
  if (!(j_min < j_max))
    throw std::invalid_argument("scan_coupling: need j_min < j_max");
  if (steps < 2) throw std::invalid_argument("scan_coupling: need steps >= 2");
  if (scale == GridScale::kLog && !(j_min > 0.0))
    throw std::invalid_argument("scan_coupling: log grid needs j_min > 0");
  PayoffCurve curve;
  curve.samples.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double f = static_cast<double>(k) / (steps - 1);
    const double J = scale == GridScale::kLinear
                         ? j_min + f * (j_max - j_min)
                         : j_min * std::pow(j_max / j_min, f);
    curve.samples.emplace_back(J, bob_payoff_at(n, J, T, avg));
  }
  return curve;
}

std::optional<FairCoupling> find_fair_coupling(int n, double T,
                                               const FairSearch& search,
                                               Averaging avg) {
  if (!(search.tol > 0.0) || !(search.coarse_step > 0.0) ||
      !(search.j_start > 0.0) || !(search.j_start < search.j_stop))
    throw std::invalid_argument("find_fair_coupling: bad search parameters");
  const auto residual = [&](double J) {
    return bob_payoff_at(n, J, T, avg) - 0.5;
  };

  double lo = search.j_start;
  double f_lo = residual(lo);
  double hi = 0.0, f_hi = 0.0;
  bool bracketed = false;
  for (double J = lo + search.coarse_step; J <= search.j_stop + 1e-12;
       J += search.coarse_step) {
    f_hi = residual(J);
    if (f_lo == 0.0 || (f_lo < 0.0) != (f_hi < 0.0)) {
      hi = J;
      bracketed = true;
      break;
    }
    lo = J;
    f_lo = f_hi;
  }
  if (!bracketed) return std::nullopt;

  while (hi - lo > search.tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = residual(mid);
    if (f_mid == 0.0 || (f_lo < 0.0) == (f_mid < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return FairCoupling{0.5 * (lo + hi), lo, hi};
}

}  // namespace qflip
