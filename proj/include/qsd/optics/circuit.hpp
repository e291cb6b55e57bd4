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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsd/measurement.hpp"
#include "qsd/optics/elements.hpp"

namespace qsd::optics {

/// Ordered optical elements over a fixed set of spatial paths. The mode
/// register is paths x {H, V}, path-major. `input_paths` names the paths the
/// input state occupies (one path for a polarization qubit, two for the
/// two-path states); a single photon propagates through the element list and
/// every bit of amplitude must end at a detector.
class OpticalCircuit {
 public:
  OpticalCircuit(std::vector<std::string> paths, std::vector<std::string> input_paths,
                 std::vector<OpticalElement> elements)
      : paths_(std::move(paths)), input_paths_(std::move(input_paths)),
        elements_(std::move(elements)) {
    validate();
  }

  const std::vector<std::string>& paths() const { return paths_; }
  const std::vector<std::string>& input_paths() const { return input_paths_; }
  const std::vector<OpticalElement>& elements() const { return elements_; }

  std::size_t mode_count() const { return 2 * paths_.size(); }
  std::size_t input_dim() const { return 2 * input_paths_.size(); }

  std::size_t path_index(const std::string& path) const {
    for (std::size_t i = 0; i < paths_.size(); ++i)
      if (paths_[i] == path) return i;
    throw validation_error("OpticalCircuit: unknown path " + path);
  }

  /// Mode index of (path, polarization); pol 0 = H, 1 = V.
  std::size_t mode_index(const std::string& path, int pol) const {
    return 2 * path_index(path) + static_cast<std::size_t>(pol);
  }

  std::vector<std::string> detector_labels() const {
    std::vector<std::string> out;
    for (const OpticalElement& e : elements_)
      if (e.kind == ElementKind::Detector) out.push_back(e.label);
    return out;
  }

  /// Copy with each half-wave plate angle shifted by delta[name] (missing
  /// names shift by zero). Used for static offsets and per-trial jitter.
  OpticalCircuit with_hwp_shifts(const std::map<std::string, double>& delta) const {
    std::vector<OpticalElement> shifted = elements_;
    for (OpticalElement& e : shifted) {
      if (e.kind != ElementKind::HalfWavePlate) continue;
      if (auto it = delta.find(e.name); it != delta.end()) e.theta += it->second;
    }
    return OpticalCircuit(paths_, input_paths_, std::move(shifted));
  }

  /// Elements from `first` onward, same paths. Lets the measurement section
  /// of a built network be analyzed separately from state preparation.
  OpticalCircuit tail(std::size_t first) const {
    return OpticalCircuit(paths_, input_paths_,
                          {elements_.begin() + static_cast<std::ptrdiff_t>(first), elements_.end()});
  }

 private:
  void validate() const {
    if (paths_.empty()) throw validation_error("OpticalCircuit: no paths");
    for (std::size_t i = 0; i < paths_.size(); ++i)
      for (std::size_t j = i + 1; j < paths_.size(); ++j)
        if (paths_[i] == paths_[j]) throw validation_error("OpticalCircuit: duplicate path id");
    if (input_paths_.empty() || input_paths_.size() > 2)
      throw validation_error("OpticalCircuit: input must occupy one or two paths");
    for (const std::string& p : input_paths_) path_index(p);

    std::vector<std::string> seen_labels;
    std::vector<std::string> detected_paths;
    for (const OpticalElement& e : elements_) {
      path_index(e.path_a);
      if (e.kind == ElementKind::PolarizingBeamSplitter) path_index(e.path_b);
      // Detectors are terminal: nothing downstream may touch their path.
      const auto touches_detected = [&](const std::string& p) {
        return std::find(detected_paths.begin(), detected_paths.end(), p) != detected_paths.end();
      };
      if (touches_detected(e.path_a) ||
          (e.kind == ElementKind::PolarizingBeamSplitter && touches_detected(e.path_b)))
        throw validation_error("OpticalCircuit: element " + e.name +
                               " references a path already consumed by a detector");
      if (e.kind == ElementKind::Detector) {
        if (std::find(seen_labels.begin(), seen_labels.end(), e.label) != seen_labels.end())
          throw validation_error("OpticalCircuit: duplicate detector label " + e.label);
        seen_labels.push_back(e.label);
        detected_paths.push_back(e.path_a);
      }
    }
    if (seen_labels.empty()) throw validation_error("OpticalCircuit: no detectors");
  }

  std::vector<std::string> paths_;
  std::vector<std::string> input_paths_;
  std::vector<OpticalElement> elements_;
};

namespace detail {

// In-place rho <- U rho U^dagger for the real rotation U = [[c,-s],[s,c]]
// acting on modes (i, j) of the full register.
inline void apply_rotation(Matrix& rho, std::size_t i, std::size_t j, double c, double s) {
  const std::size_t n = rho.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex ri = rho(i, k), rj = rho(j, k);
    rho(i, k) = c * ri - s * rj;
    rho(j, k) = s * ri + c * rj;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex ci = rho(k, i), cj = rho(k, j);
    rho(k, i) = c * ci - s * cj;
    rho(k, j) = s * ci + c * cj;
  }
}

inline void apply_mode_swap(Matrix& rho, std::size_t i, std::size_t j) {
  const std::size_t n = rho.dim();
  for (std::size_t k = 0; k < n; ++k) std::swap(rho(i, k), rho(j, k));
  for (std::size_t k = 0; k < n; ++k) std::swap(rho(k, i), rho(k, j));
}

// Absorb the two modes of a path: return their population and zero their
// rows/columns (coherence to detected modes is gone once the click happened).
inline Complex absorb_modes(Matrix& rho, std::size_t h, std::size_t v) {
  const Complex population = rho(h, h) + rho(v, v);
  const std::size_t n = rho.dim();
  for (std::size_t k = 0; k < n; ++k) {
    rho(h, k) = rho(k, h) = Complex{};
    rho(v, k) = rho(k, v) = Complex{};
  }
  return population;
}

struct LinearClicks {
  std::vector<std::pair<std::string, Complex>> clicks;
  Complex leftover;
};

// Propagates an arbitrary operator on the mode register through the circuit.
// Linear in the input; used both for physical states and for matrix units
// when reconstructing the POVM.
inline LinearClicks propagate_linear(const OpticalCircuit& circuit, Matrix rho) {
  LinearClicks out;
  for (const OpticalElement& e : circuit.elements()) {
    switch (e.kind) {
      case ElementKind::HalfWavePlate: {
        const std::size_t h = circuit.mode_index(e.path_a, 0);
        apply_rotation(rho, h, h + 1, std::cos(e.theta), std::sin(e.theta));
        break;
      }
      case ElementKind::PolarizingBeamSplitter: {
        apply_mode_swap(rho, circuit.mode_index(e.path_a, 1), circuit.mode_index(e.path_b, 1));
        break;
      }
      case ElementKind::Detector: {
        const std::size_t h = circuit.mode_index(e.path_a, 0);
        out.clicks.emplace_back(e.label, absorb_modes(rho, h, h + 1));
        break;
      }
    }
  }
  out.leftover = rho.trace();
  return out;
}

inline Matrix embed_input(const OpticalCircuit& circuit, const Matrix& rho_in) {
  if (rho_in.dim() != circuit.input_dim())
    throw validation_error("propagate: input dimension " + std::to_string(rho_in.dim()) +
                           " does not match circuit input of dimension " +
                           std::to_string(circuit.input_dim()));
  std::vector<std::size_t> modes;
  for (const std::string& p : circuit.input_paths()) {
    modes.push_back(circuit.mode_index(p, 0));
    modes.push_back(circuit.mode_index(p, 1));
  }
  Matrix full(circuit.mode_count());
  for (std::size_t i = 0; i < modes.size(); ++i)
    for (std::size_t j = 0; j < modes.size(); ++j) full(modes[i], modes[j]) = rho_in(i, j);
  return full;
}

}  // namespace detail

/// Sends a state through the circuit: elements apply in order, each detector
/// records the population arriving on its path. Fails if more than
/// tol::kLeftover of the photon never reaches a detector.
inline ClickDistribution propagate(const OpticalCircuit& circuit, const DensityOperator& rho_in) {
  detail::LinearClicks run =
      detail::propagate_linear(circuit, detail::embed_input(circuit, rho_in.matrix()));
  if (std::abs(run.leftover) > tol::kLeftover)
    throw validation_error("propagate: undetected population " +
                           std::to_string(std::abs(run.leftover)) +
                           " left in the circuit (missing detector or sink)");
  std::vector<std::pair<std::string, double>> probs;
  probs.reserve(run.clicks.size());
  for (auto& [label, amp] : run.clicks)
    probs.emplace_back(label, qsd::detail::clamp_probability(amp.real(), "propagate[" + label + "]"));
  return ClickDistribution(std::move(probs));
}

/// Reconstructs the measurement the circuit implements on its input space by
/// propagating all matrix units and reassembling each detector's element
/// from the clicks (propagation is linear in the input operator).
inline Povm circuit_to_povm(const OpticalCircuit& circuit) {
  const std::size_t d = circuit.input_dim();
  const auto labels = circuit.detector_labels();
  std::vector<Outcome> outcomes;
  outcomes.reserve(labels.size());
  for (const std::string& l : labels) outcomes.push_back({l, Matrix(d)});

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix unit(d);
      unit(i, j) = 1.0;
      const detail::LinearClicks run =
          detail::propagate_linear(circuit, detail::embed_input(circuit, unit));
      if (i == j && std::abs(run.leftover) > tol::kLeftover)
        throw validation_error("circuit_to_povm: circuit loses population from input mode " +
                               std::to_string(i));
      for (std::size_t k = 0; k < outcomes.size(); ++k) {
        // Tr(E_ij Pi) = Pi[j][i]
        outcomes[k].element(j, i) = run.clicks[k].second;
      }
    }
  }
  for (Outcome& o : outcomes) o.element = hermitized(o.element);
  Povm povm(Povm::unchecked, std::move(outcomes));
  povm.validate();
  return povm;
}

}  // namespace qsd::optics
