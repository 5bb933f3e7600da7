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

#include "mgspec/input_states.hpp"

#include <numbers>
#include <stdexcept>

#include "mgspec/gates.hpp"

namespace mgspec {

InputKind input_kind_from_name(std::string_view name) {
  if (name == "computational_basis") return InputKind::ComputationalBasis;
  if (name == "random_real_product") return InputKind::RandomRealProduct;
  if (name == "haar_blocks") return InputKind::HaarBlocks;
  throw std::invalid_argument("unknown input kind: " + std::string(name));
}

std::string to_string(InputKind kind) {
  switch (kind) {
    case InputKind::ComputationalBasis:
      return "computational_basis";
    case InputKind::RandomRealProduct:
      return "random_real_product";
    case InputKind::HaarBlocks:
      return "haar_blocks";
  }
  return "?";
}

Statevector prepare(const InputSpec& spec, int num_qubits, Rng& rng) {
  switch (spec.kind) {
    case InputKind::ComputationalBasis: {
      if (spec.bits.empty()) return Statevector(num_qubits);
      return basis_state(num_qubits, spec.bits);
    }
    case InputKind::RandomRealProduct: {
      Statevector state(num_qubits);
      for (int q = 1; q <= num_qubits; ++q) {
        const double theta = 2.0 * std::numbers::pi * uniform_unit(rng);
        apply(state, LocalUnitary{q, rotation_y(theta)});
      }
      return state;
    }
    case InputKind::HaarBlocks: {
      const int k = spec.block_size;
      if (k < 1 || num_qubits % k != 0) {
        throw std::invalid_argument("prepare: block size must divide num_qubits");
      }
      const Eigen::Index block_dim = Eigen::Index(1) << k;
      Eigen::VectorXcd amps = Eigen::VectorXcd::Ones(1);
      for (int b = 0; b < num_qubits / k; ++b) {
        Eigen::VectorXcd block(block_dim);
        for (Eigen::Index i = 0; i < block_dim; ++i) {
          block[i] = complex_gaussian(rng);
        }
        block.normalize();
        // Kronecker product, big-endian: earlier blocks are more significant.
        Eigen::VectorXcd next(amps.size() * block_dim);
        for (Eigen::Index i = 0; i < amps.size(); ++i) {
          next.segment(i * block_dim, block_dim) = amps[i] * block;
        }
        amps = std::move(next);
      }
      Statevector state(num_qubits);
      state.amplitudes() = std::move(amps);
      return state;
    }
  }
  throw std::logic_error("prepare: unknown input kind");
}

}  // namespace mgspec
