// Copyright 2026 The qcomb Authors
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

#include "qcomb/circuit.hpp"
#include "qcomb/comb.hpp"
#include "qcomb/gf2.hpp"

namespace qcomb::testing {

/// 4x4 parity matrix reduced step by step in the RowCol walkthrough.
inline BitMatrix rowcol_example_matrix() {
  return BitMatrix::from_rows({{1, 0, 0, 1}, {1, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
}

/// Four-qubit circuit with gates V, U, W, H cut out in that order.
inline Circuit comb_example_circuit() {
  Circuit c(4);
  c.cx(1, 2).cx(0, 3).cx(1, 3).cx(1, 0).cx(0, 2);
  c.gate("V", 1);
  c.cx(0, 1);
  c.gate("U", 2);
  c.cx(3, 2).cx(3, 1).cx(2, 1);
  c.gate("W", 2);
  c.cx(3, 2).cx(1, 2).cx(0, 2).cx(2, 0);
  c.gate("H", 1);
  return c;
}

inline std::vector<Hole> comb_example_holes() { return {{1, 4}, {2, 6}, {6, 7}, {4, 5}}; }

/// Parity matrix of the comb of comb_example_circuit(), one row per
/// temporal qubit.
inline BitMatrix comb_example_matrix() {
  return BitMatrix::from_rows({
      {0, 0, 0, 1, 1, 0, 1, 1},
      {0, 1, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0, 0, 0},
      {1, 1, 0, 1, 0, 0, 0, 0},
      {1, 1, 0, 0, 1, 0, 1, 0},
      {0, 0, 0, 0, 0, 1, 0, 0},
      {1, 1, 0, 1, 0, 0, 1, 0},
      {1, 1, 0, 1, 1, 0, 1, 1},
  });
}

}  // namespace qcomb::testing
