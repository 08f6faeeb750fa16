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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcomb/circuit.hpp"

namespace qcomb {

/// The cut-out gate sits between temporal qubits `first` and `second`:
/// `first` ends directly before `second` begins.
struct Hole {
  Qubit first = 0;
  Qubit second = 0;

  friend bool operator==(const Hole&, const Hole&) = default;
  friend auto operator<=>(const Hole&, const Hole&) = default;
};

/// A CNOT circuit over temporal qubits together with its holes.
struct Comb {
  Circuit circuit;
  std::vector<Hole> holes;

  friend bool operator==(const Comb&, const Comb&) = default;
};

/// Gate assigned to each hole. The gate's qubit field is ignored.
using PluggingMap = std::map<Hole, SingleQubitGate>;

struct Decomposition {
  Comb comb;
  PluggingMap plugging;
};

/// Cuts every single-qubit gate out into a hole. Each cut opens a fresh
/// temporal qubit; fresh qubits are numbered from n upwards, grouped by
/// logical qubit and ordered by cut time within each group. Holes are listed
/// in cut order.
Decomposition decompose(const Circuit& c);

/// Plugs the gates back in hole by hole: reorders commuting gates so every
/// gate on the hole's first qubit precedes every gate on its second, inserts
/// the plugged gate right before the first gate on the second qubit, and
/// merges the second qubit into the first. The surviving qubits are then
/// relabelled in ascending order. Returns nullopt when a reordering would
/// need a cyclic dependency or a hole collapses to (q, q). Throws
/// std::invalid_argument when `plugging` misses a hole.
std::optional<Circuit> try_compose(const Comb& comb, const PluggingMap& plugging);

/// try_compose, throwing CompositionError on failure.
Circuit compose(const Comb& comb, const PluggingMap& plugging);

/// True when composition succeeds for every plugging map: the holes form
/// linear chains and the dependency graph of gates and holes is acyclic.
bool validate(const Comb& comb);

struct Frontier {
  /// Temporal qubits that open no hole, ascending.
  std::vector<Qubit> available;
  /// t[q0]: the end of the hole chain starting at logical qubit q0.
  std::vector<Qubit> t;
};

/// Available qubits and temporal map. Chain heads, taken in ascending order,
/// are the logical qubits 0..n_logical-1. Throws std::invalid_argument for
/// an invalid comb or a chain count different from `n_logical`.
Frontier frontier(const Comb& comb, std::size_t n_logical);

/// Logical qubit owning each temporal qubit.
std::vector<Qubit> logical_owners(const Comb& comb);

/// Temporal qubits of each chain from head to tail, chains ordered by head.
std::vector<std::vector<Qubit>> hole_chains(const Comb& comb);

/// Circuit text followed by a `// holes: (a,b) (c,d)` trailer line.
std::string write_comb(const Comb& comb);
Comb parse_comb(std::string_view text);

/// One `(a,b)=label(params)` line per hole.
std::string write_plugging(const PluggingMap& plugging);
PluggingMap parse_plugging(std::string_view text);

}  // namespace qcomb
