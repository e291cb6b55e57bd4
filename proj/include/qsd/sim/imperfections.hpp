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

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "qsd/optics/networks.hpp"
#include "qsd/sim/rng.hpp"

namespace qsd::sim {

/// Hardware imperfection model: systematic waveplate miscalibration
/// (per-element static offsets), per-trial Gaussian waveplate jitter, and a
/// preparation misalignment that replaces part of the input state by the
/// maximally mixed state on its own support.
struct ImperfectionModel {
  std::map<std::string, double> hwp_static_offset;  // radians, by element name
  double hwp_jitter_sigma = 0.0;                    // radians
  double prep_misalignment = 0.0;                   // in [0, 1)

  void validate() const {
    if (!(hwp_jitter_sigma >= 0.0))
      throw validation_error("ImperfectionModel: jitter sigma must be nonnegative");
    if (!(prep_misalignment >= 0.0) || prep_misalignment >= 1.0)
      throw validation_error("ImperfectionModel: misalignment must be in [0, 1)");
  }

  bool has_jitter() const { return hwp_jitter_sigma > 0.0; }
  bool is_ideal() const {
    return hwp_static_offset.empty() && hwp_jitter_sigma == 0.0 && prep_misalignment == 0.0;
  }
};

/// Parameters of a maximum-confidence run.
struct McSpec {
  PartialPolarizationParams pol;
  Sign prepared;
};

/// Parameters of an unambiguous-discrimination run.
struct UsdSpec {
  double alpha;
  int prepared;  // 1 or 2
  Rho0Params rho0;
};

using CircuitSpec = std::variant<McSpec, UsdSpec>;

inline optics::BuiltCircuit build_circuit(const CircuitSpec& spec) {
  if (const auto* mc = std::get_if<McSpec>(&spec))
    return optics::build_mc_circuit(mc->pol, mc->prepared);
  const auto& usd = std::get<UsdSpec>(spec);
  return optics::build_usd_circuit(usd.alpha, usd.prepared, usd.rho0);
}

/// (1 - m) rho + m * (projector onto supp rho) / rank. Support-preserving
/// noise: a pure state stays itself, mixed states blur toward uniform weight
/// over their own support.
inline DensityOperator mix_toward_support(const DensityOperator& rho, double m) {
  if (m == 0.0) return rho;
  const EigenSystem es = eig_hermitian(rho.matrix());
  Matrix support(rho.dim());
  std::size_t rank = 0;
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    if (es.values[k] > 1e-9) {
      const auto v = es.eigenvector(k);
      support += outer(v, v);
      ++rank;
    }
  }
  Matrix mixed = rho.matrix() * Complex{1.0 - m, 0.0};
  mixed += support * Complex{m / static_cast<double>(rank), 0.0};
  return DensityOperator(hermitized(mixed));
}

namespace detail {

inline std::map<std::string, double> jitter_shifts(const optics::OpticalCircuit& circuit,
                                                   const ImperfectionModel& imp, SplitRng rng) {
  std::map<std::string, double> shifts = imp.hwp_static_offset;
  if (imp.has_jitter()) {
    std::uint64_t index = 0;
    for (const auto& e : circuit.elements()) {
      if (e.kind != optics::ElementKind::HalfWavePlate) continue;
      SplitRng stream = rng.fork(index++);
      shifts[e.name] += imp.hwp_jitter_sigma * stream.next_gaussian();
    }
  }
  return shifts;
}

}  // namespace detail

/// Click distribution of one jittered trial: every waveplate angle becomes
/// theta + static offset + a Gaussian draw from the trial's stream, and the
/// input state is degraded by the preparation misalignment.
inline ClickDistribution perturbed_distribution(const CircuitSpec& spec,
                                                const ImperfectionModel& imp,
                                                std::uint64_t trial_seed) {
  imp.validate();
  const optics::BuiltCircuit built = build_circuit(spec);
  const DensityOperator input = mix_toward_support(built.input, imp.prep_misalignment);
  const auto shifts = detail::jitter_shifts(built.circuit, imp, SplitRng(trial_seed));
  if (shifts.empty()) return optics::propagate(built.circuit, input);
  return optics::propagate(built.circuit.with_hwp_shifts(shifts), input);
}

}  // namespace qsd::sim
