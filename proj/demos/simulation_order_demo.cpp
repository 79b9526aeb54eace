// Copyright 2026 The qcat authors
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

// Orders a few interaction pairs under local and catalytic simulation, and
// shows the overlap floor that blocks entanglement-increasing conversions.

#include <cmath>
#include <iostream>
#include <vector>

#include "qcat/qcat.hpp"

int main() {
  struct Pair {
    qcat::HamParams h, t;
  };
  const std::vector<Pair> pairs = {
      {{0.5, 0.0, 0.0}, {0.3, 0.2, 0.0}},
      {{0.3, 0.2, 0.0}, {0.5, 0.0, 0.0}},
      {{0.3, 0.2, 0.1}, {0.6, 0.0, 0.0}},
      {{0.3, 0.2, 0.1}, {0.3, 0.2, -0.1}},
      {{0.7, 0.6, 0.5}, {0.65, 0.63, 0.2}},
  };
  std::cout << "source -> target verdicts:\n";
  for (const auto& [h, t] : pairs) {
    const qcat::SimulationVerdict v = qcat::classify_simulation(h, t);
    std::cout << "  (" << h.c1 << "," << h.c2 << "," << h.c3 << ") -> (" << t.c1 << "," << t.c2
              << "," << t.c3 << "): " << qcat::to_string(v.kind) << " [" << v.witness << "]";
    if (v.c4_interval.has_value()) {
      std::cout << " c4 in [" << v.c4_interval->first << ", " << v.c4_interval->second << "]";
    }
    std::cout << "\n";
  }

  const double c1 = 0.3, c2 = 0.2;
  const qcat::NogoReport rep = qcat::nogo_search(c1, c2, 500, 7);
  std::cout << "\noverlap floor at (" << c1 << ", " << c2 << "):\n";
  std::cout << "  bound cos^2(c1+c2)   " << qcat::format_double(rep.bound) << "\n";
  std::cout << "  best found overlap   "
            << qcat::format_double(rep.min_over_xy_of_max_overlap) << "\n";
  std::cout << "  samples              " << rep.samples << "\n";
  return 0;
}
