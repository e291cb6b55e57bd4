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

#include <cmath>
#include <string>
#include <utility>

#include "qsd/quantum.hpp"

namespace qsd::optics {

/// Polarization rotation by theta on (H, V):
/// [[cos t, -sin t], [sin t, cos t]].
inline UnitaryOperator hwp_matrix(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return UnitaryOperator(Matrix{{Complex{c}, Complex{-s}}, {Complex{s}, Complex{c}}});
}

/// Polarizing beam splitter on ports (a, b): H of each port passes, the V
/// amplitudes swap ports. Real unit amplitudes, no reflection phase. On the
/// mode order (H_a, V_a, H_b, V_b) this is the permutation exchanging V_a
/// and V_b; applying it twice is the identity.
inline UnitaryOperator pbs_matrix(const std::string& port_a, const std::string& port_b) {
  if (port_a == port_b) throw validation_error("pbs_matrix: ports must be distinct");
  Matrix m(4);
  m(0, 0) = 1.0;
  m(1, 3) = 1.0;
  m(2, 2) = 1.0;
  m(3, 1) = 1.0;
  return UnitaryOperator(std::move(m));
}

enum class ElementKind { HalfWavePlate, PolarizingBeamSplitter, Detector };

/// One bench element. HWPs address a single path; PBSs couple two paths;
/// detectors absorb a whole path (both polarizations) into a labeled click.
struct OpticalElement {
  ElementKind kind;
  std::string name;
  std::string path_a;
  std::string path_b;  // PBS only
  double theta = 0.0;  // HWP only
  std::string label;   // Detector only

  static OpticalElement hwp(std::string name, std::string path, double theta) {
    OpticalElement e;
    e.kind = ElementKind::HalfWavePlate;
    e.name = std::move(name);
    e.path_a = std::move(path);
    e.theta = theta;
    return e;
  }

  static OpticalElement pbs(std::string name, std::string port_a, std::string port_b) {
    if (port_a == port_b) throw validation_error("OpticalElement: PBS ports must be distinct");
    OpticalElement e;
    e.kind = ElementKind::PolarizingBeamSplitter;
    e.name = std::move(name);
    e.path_a = std::move(port_a);
    e.path_b = std::move(port_b);
    return e;
  }

  static OpticalElement detector(std::string label, std::string path) {
    OpticalElement e;
    e.kind = ElementKind::Detector;
    e.name = label;
    e.path_a = std::move(path);
    e.label = std::move(label);
    return e;
  }
};

}  // namespace qsd::optics
