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

#include <json.hpp>

#include "qsd/optics/circuit.hpp"

namespace qsd::optics {

/// Circuit description for debugging and golden-file tests: paths, input
/// binding, and elements in order with angles in radians.
inline nlohmann::ordered_json circuit_to_json(const OpticalCircuit& circuit) {
  nlohmann::ordered_json j;
  j["paths"] = circuit.paths();
  j["input_paths"] = circuit.input_paths();
  j["elements"] = nlohmann::ordered_json::array();
  for (const OpticalElement& e : circuit.elements()) {
    nlohmann::ordered_json je;
    je["name"] = e.name;
    switch (e.kind) {
      case ElementKind::HalfWavePlate:
        je["type"] = "hwp";
        je["path"] = e.path_a;
        je["theta_rad"] = e.theta;
        break;
      case ElementKind::PolarizingBeamSplitter:
        je["type"] = "pbs";
        je["ports"] = {e.path_a, e.path_b};
        break;
      case ElementKind::Detector:
        je["type"] = "detector";
        je["path"] = e.path_a;
        je["label"] = e.label;
        break;
    }
    j["elements"].push_back(std::move(je));
  }
  return j;
}

}  // namespace qsd::optics
