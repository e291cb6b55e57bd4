// Copyright 2026 The qsd Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdio>
#include <fstream>
#include <string>

#include "qsd/sim/sweep.hpp"

namespace qsd::io {

/// Stable sweep schema. `ci_low`/`ci_high` bracket `error_rate` (Wilson,
/// 95%); the per-fraction intervals live on SweepRow for in-process use.
/// Fractions are normalized by the four APD counts; n_trials additionally
/// counts light lost on dark ports under jitter.
inline constexpr const char* kSweepCsvHeader =
    "strategy,angle_deg,prepared,n_trials,n_apd0,n_apd0p,n_apd1,n_apd2,"
    "frac_inconclusive,frac_apd1,frac_apd2,error_rate,ci_low,ci_high,"
    "analytic_q,analytic_c,analytic_helstrom";

namespace detail {
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}
}  // namespace detail

inline std::string to_csv(const sim::SweepResult& result) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  const auto d = detail::fmt_double;
  for (const sim::SweepRow& r : result.rows) {
    out += to_string(r.strategy);
    out += ',' + d(r.angle_deg);
    out += ',' + r.prepared;
    out += ',' + std::to_string(r.n_trials);
    out += ',' + std::to_string(r.n_apd0);
    out += ',' + std::to_string(r.n_apd0p);
    out += ',' + std::to_string(r.n_apd1);
    out += ',' + std::to_string(r.n_apd2);
    out += ',' + d(r.frac_inconclusive);
    out += ',' + d(r.frac_apd1);
    out += ',' + d(r.frac_apd2);
    out += ',' + d(r.error_rate);
    out += ',' + d(r.ci_error.low);
    out += ',' + d(r.ci_error.high);
    out += ',' + d(r.analytic_q);
    out += ',' + d(r.analytic_c);
    out += ',' + d(r.analytic_helstrom);
    out += '\n';
  }
  return out;
}

inline void write_csv(const std::string& path, const sim::SweepResult& result) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw validation_error("write_csv: cannot open " + path);
  f << to_csv(result);
}

}  // namespace qsd::io
