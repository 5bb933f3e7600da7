// Copyright 2026 The mgspec authors
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

#include <string>
#include <string_view>
#include <vector>

#include "mgspec/gates.hpp"
#include "mgspec/rng.hpp"
#include "mgspec/statevector.hpp"

namespace mgspec {

// Gates within a layer act on disjoint sites.
struct Layer {
  std::vector<LocalUnitary> gates;
};

struct Circuit {
  int num_qubits = 0;
  std::vector<Layer> layers;
};

enum class BrickworkKind { Matchgate, Clifford, Haar };

BrickworkKind brickwork_kind_from_name(std::string_view name);
std::string to_string(BrickworkKind kind);

// Alternating brickwork schedule: even-indexed layers place gates on pairs
// (1,2),(3,4),...,(N-1,N), odd-indexed layers on (2,3),(4,5),...,(N-2,N-1).
// start_parity shifts the alternation so a schedule can be continued.
Circuit brickwork(int num_qubits, int num_layers, BrickworkKind kind, Rng& rng, int start_parity = 0);

// num_swaps SWAP gates in at most two layers: even pairs (1,2),(3,4),...
// fill first, left to right, then the remainder spills onto the odd pairs
// (2,3),(4,5),... in a second layer.
Circuit swap_injection(int num_qubits, int num_swaps);

enum class ConjugationKind { None, C1, C2, C3, C4 };

ConjugationKind conjugation_from_name(std::string_view name);
std::string to_string(ConjugationKind kind);

// Clifford prefixes applied before the brickwork, listed in temporal order
// (first gate listed acts first); CNOT(a, b) has control a and target b.
//   C1: CNOT(1,2), CNOT(2,3), ..., CNOT(N-1,N), then H on every qubit.
//   C2: CNOT(1,2), CNOT(3,4), ... then CNOT(3,2), CNOT(5,4), ...; pairs
//       whose indices exceed N are dropped.
//   C3: H1, H2, then CNOT(1,2).
//   C4: H1, H2, H3, then CNOT(1,2), CNOT(2,3).
Circuit conjugation_circuit(ConjugationKind kind, int num_qubits);

// Throws on overlapping sites within a layer or out-of-range sites.
void validate(const Circuit& circuit);

void apply(Statevector& state, const Layer& layer);
void apply(Statevector& state, const Circuit& circuit);

std::size_t gate_count(const Circuit& circuit);

// JSON document {num_qubits, layers:[[{site, matrix:[[re,im],...]}]]} with
// row-major matrices, floats carrying 17 significant digits so the decimal
// round trip is exact.
std::string to_json(const Circuit& circuit);
Circuit circuit_from_json(std::string_view text);

}  // namespace mgspec
