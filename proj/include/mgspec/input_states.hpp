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

#include "mgspec/rng.hpp"
#include "mgspec/statevector.hpp"

namespace mgspec {

enum class InputKind { ComputationalBasis, RandomRealProduct, HaarBlocks };

InputKind input_kind_from_name(std::string_view name);
std::string to_string(InputKind kind);

// Input state family. For HaarBlocks, block_size must divide the qubit
// count; for ComputationalBasis, bits selects the basis state (empty means
// all zeros).
struct InputSpec {
  InputKind kind = InputKind::RandomRealProduct;
  int block_size = 1;
  std::string bits;
};

// RandomRealProduct rotates each qubit of |00...0> by an independent
// R_y(theta) with theta uniform on [0, 2*pi), giving a random real product
// state. HaarBlocks prepares consecutive blocks of block_size qubits, each
// in an independent Haar-random pure state (normalized complex Gaussian).
Statevector prepare(const InputSpec& spec, int num_qubits, Rng& rng);

}  // namespace mgspec
