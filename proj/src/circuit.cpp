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

#include "mgspec/circuit.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

#include "mgspec/io.hpp"

namespace mgspec {

namespace {

LocalUnitary sample_gate(BrickworkKind kind, Rng& rng, int site) {
  switch (kind) {
    case BrickworkKind::Matchgate:
      return random_matchgate(rng, site);
    case BrickworkKind::Clifford:
      return random_two_qubit_clifford(rng, site);
    case BrickworkKind::Haar:
      return random_haar_two_qubit(rng, site);
  }
  throw std::logic_error("sample_gate: unknown kind");
}

Layer hadamard_layer(int first, int last) {
  Layer layer;
  for (int q = first; q <= last; ++q) {
    layer.gates.push_back(LocalUnitary{q, hadamard()});
  }
  return layer;
}

// CNOT with control a, target b; a and b must be adjacent.
LocalUnitary cnot_on(int control, int target) {
  if (target == control + 1) return LocalUnitary{control, cnot_gate()};
  if (target == control - 1) return LocalUnitary{target, cnot_reversed_gate()};
  throw std::invalid_argument("cnot_on: control and target must be adjacent");
}

}  // namespace

BrickworkKind brickwork_kind_from_name(std::string_view name) {
  if (name == "matchgate") return BrickworkKind::Matchgate;
  if (name == "clifford") return BrickworkKind::Clifford;
  if (name == "haar") return BrickworkKind::Haar;
  throw std::invalid_argument("unknown brickwork kind: " + std::string(name));
}

std::string to_string(BrickworkKind kind) {
  switch (kind) {
    case BrickworkKind::Matchgate:
      return "matchgate";
    case BrickworkKind::Clifford:
      return "clifford";
    case BrickworkKind::Haar:
      return "haar";
  }
  return "?";
}

Circuit brickwork(int num_qubits, int num_layers, BrickworkKind kind, Rng& rng, int start_parity) {
  if (num_qubits < 2 || num_qubits % 2 != 0) {
    throw std::invalid_argument("brickwork: num_qubits must be even and >= 2");
  }
  if (num_layers < 0) {
    throw std::invalid_argument("brickwork: num_layers must be nonnegative");
  }
  Circuit circuit;
  circuit.num_qubits = num_qubits;
  circuit.layers.reserve(static_cast<std::size_t>(num_layers));
  for (int l = 0; l < num_layers; ++l) {
    const int parity = (l + start_parity) % 2;
    Layer layer;
    const int first = parity == 0 ? 1 : 2;
    for (int site = first; site + 1 <= num_qubits; site += 2) {
      layer.gates.push_back(sample_gate(kind, rng, site));
    }
    circuit.layers.push_back(std::move(layer));
  }
  return circuit;
}

Circuit swap_injection(int num_qubits, int num_swaps) {
  if (num_qubits < 2 || num_qubits % 2 != 0) {
    throw std::invalid_argument("swap_injection: num_qubits must be even and >= 2");
  }
  if (num_swaps < 1 || num_swaps > num_qubits - 1) {
    throw std::invalid_argument("swap_injection: num_swaps must be in [1, N-1]");
  }
  Circuit circuit;
  circuit.num_qubits = num_qubits;
  const int even_capacity = num_qubits / 2;
  const int even_count = std::min(num_swaps, even_capacity);
  Layer even_layer;
  for (int i = 0; i < even_count; ++i) {
    even_layer.gates.push_back(LocalUnitary{2 * i + 1, swap_gate()});
  }
  circuit.layers.push_back(std::move(even_layer));
  const int odd_count = num_swaps - even_count;
  if (odd_count > 0) {
    Layer odd_layer;
    for (int i = 0; i < odd_count; ++i) {
      odd_layer.gates.push_back(LocalUnitary{2 * i + 2, swap_gate()});
    }
    circuit.layers.push_back(std::move(odd_layer));
  }
  return circuit;
}

ConjugationKind conjugation_from_name(std::string_view name) {
  if (name == "none") return ConjugationKind::None;
  if (name == "C1") return ConjugationKind::C1;
  if (name == "C2") return ConjugationKind::C2;
  if (name == "C3") return ConjugationKind::C3;
  if (name == "C4") return ConjugationKind::C4;
  throw std::invalid_argument("unknown conjugation circuit: " + std::string(name));
}

std::string to_string(ConjugationKind kind) {
  switch (kind) {
    case ConjugationKind::None:
      return "none";
    case ConjugationKind::C1:
      return "C1";
    case ConjugationKind::C2:
      return "C2";
    case ConjugationKind::C3:
      return "C3";
    case ConjugationKind::C4:
      return "C4";
  }
  return "?";
}

Circuit conjugation_circuit(ConjugationKind kind, int num_qubits) {
  Circuit circuit;
  circuit.num_qubits = num_qubits;
  switch (kind) {
    case ConjugationKind::None:
      return circuit;
    case ConjugationKind::C1: {
      if (num_qubits < 2) {
        throw std::invalid_argument("conjugation_circuit: C1 needs num_qubits >= 2");
      }
      // The chain shares qubits between consecutive CNOTs, one per layer.
      for (int q = 1; q < num_qubits; ++q) {
        circuit.layers.push_back(Layer{{cnot_on(q, q + 1)}});
      }
      circuit.layers.push_back(hadamard_layer(1, num_qubits));
      return circuit;
    }
    case ConjugationKind::C2: {
      if (num_qubits < 2) {
        throw std::invalid_argument("conjugation_circuit: C2 needs num_qubits >= 2");
      }
      Layer down;  // CNOT(1,2), CNOT(3,4), ...
      for (int a = 1; a + 1 <= num_qubits; a += 2) {
        down.gates.push_back(cnot_on(a, a + 1));
      }
      Layer up;  // CNOT(3,2), CNOT(5,4), ...
      for (int a = 3; a <= num_qubits; a += 2) {
        up.gates.push_back(cnot_on(a, a - 1));
      }
      circuit.layers.push_back(std::move(down));
      circuit.layers.push_back(std::move(up));
      return circuit;
    }
    case ConjugationKind::C3: {
      if (num_qubits < 2) {
        throw std::invalid_argument("conjugation_circuit: C3 needs num_qubits >= 2");
      }
      circuit.layers.push_back(hadamard_layer(1, 2));
      circuit.layers.push_back(Layer{{cnot_on(1, 2)}});
      return circuit;
    }
    case ConjugationKind::C4: {
      if (num_qubits < 3) {
        throw std::invalid_argument("conjugation_circuit: C4 needs num_qubits >= 3");
      }
      circuit.layers.push_back(hadamard_layer(1, 3));
      circuit.layers.push_back(Layer{{cnot_on(1, 2)}});
      circuit.layers.push_back(Layer{{cnot_on(2, 3)}});
      return circuit;
    }
  }
  throw std::logic_error("conjugation_circuit: unknown kind");
}

void validate(const Circuit& circuit) {
  for (const Layer& layer : circuit.layers) {
    std::set<int> used;
    for (const LocalUnitary& gate : layer.gates) {
      const int last = gate.arity() == 1 ? gate.site : gate.site + 1;
      if (gate.site < 1 || last > circuit.num_qubits) {
        throw std::invalid_argument("validate: gate site out of range");
      }
      for (int q = gate.site; q <= last; ++q) {
        if (!used.insert(q).second) {
          throw std::invalid_argument("validate: overlapping gates within a layer");
        }
      }
    }
  }
}

void apply(Statevector& state, const Layer& layer) {
  for (const LocalUnitary& gate : layer.gates) {
    apply(state, gate);
  }
}

void apply(Statevector& state, const Circuit& circuit) {
  if (circuit.num_qubits != state.num_qubits()) {
    throw std::invalid_argument("apply: circuit and state disagree on qubit count");
  }
  for (const Layer& layer : circuit.layers) {
    apply(state, layer);
  }
}

std::size_t gate_count(const Circuit& circuit) {
  std::size_t count = 0;
  for (const Layer& layer : circuit.layers) {
    count += layer.gates.size();
  }
  return count;
}

std::string to_json(const Circuit& circuit) {
  std::string out = "{\"num_qubits\":" + std::to_string(circuit.num_qubits) + ",\"layers\":[";
  bool first_layer = true;
  for (const Layer& layer : circuit.layers) {
    if (!first_layer) out += ',';
    first_layer = false;
    out += '[';
    bool first_gate = true;
    for (const LocalUnitary& gate : layer.gates) {
      if (!first_gate) out += ',';
      first_gate = false;
      out += "{\"site\":" + std::to_string(gate.site) + ",\"matrix\":[";
      const Eigen::Index n = gate.matrix.rows();
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          if (i != 0 || j != 0) out += ',';
          out += '[';
          out += io::format_double(gate.matrix(i, j).real());
          out += ',';
          out += io::format_double(gate.matrix(i, j).imag());
          out += ']';
        }
      }
      out += "]}";
    }
    out += ']';
  }
  out += "]}";
  return out;
}

Circuit circuit_from_json(std::string_view text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  Circuit circuit;
  circuit.num_qubits = doc.at("num_qubits").get<int>();
  for (const auto& layer_doc : doc.at("layers")) {
    Layer layer;
    for (const auto& gate_doc : layer_doc) {
      LocalUnitary gate;
      gate.site = gate_doc.at("site").get<int>();
      const auto& entries = gate_doc.at("matrix");
      Eigen::Index n;
      if (entries.size() == 4) {
        n = 2;
      } else if (entries.size() == 16) {
        n = 4;
      } else {
        throw std::invalid_argument("circuit_from_json: matrix must have 4 or 16 entries");
      }
      gate.matrix.resize(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          const auto& pair = entries.at(static_cast<std::size_t>(i * n + j));
          gate.matrix(i, j) = std::complex<double>(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
      }
      layer.gates.push_back(std::move(gate));
    }
    circuit.layers.push_back(std::move(layer));
  }
  validate(circuit);
  return circuit;
}

}  // namespace mgspec
