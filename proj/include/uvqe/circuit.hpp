// Copyright 2026 The uvqe authors
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

#pragma once

#include <vector>

#include "uvqe/types.hpp"

namespace uvqe {

// Ordered product of unitary layers applied to a fixed reference state.
// layers[0] is the leftmost factor, so the output state is
// layers[0] * layers[1] * ... * layers[N-1] * reference.
struct CircuitState {
  std::vector<Matrix> layers;
  Vector reference;

  int depth() const { return static_cast<int>(layers.size()); }
  int dim() const { return static_cast<int>(reference.size()); }

  Vector output_state() const;
};

// Circuit of identity layers with reference state e_0.
CircuitState identity_circuit(int dim, int num_layers);

}  // namespace uvqe
