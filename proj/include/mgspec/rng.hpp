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

#include <complex>
#include <cstdint>
#include <random>

namespace mgspec {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Seed for the private RNG stream of one circuit realization. Every
// realization owns its own engine, so results do not depend on scheduling
// or thread count.
std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t index);

// Uniform on (0, 1], one engine draw. All samplers below are built from
// engine draws directly so that identical seeds give identical streams on
// every platform.
double uniform_unit(Rng& rng);

// Uniform integer in [0, n), rejection sampled (no modulo bias).
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

// Standard normal (Box-Muller).
double gaussian(Rng& rng);

// Real and imaginary parts each standard normal.
std::complex<double> complex_gaussian(Rng& rng);

// Exponential with unit rate.
double exponential(Rng& rng);

}  // namespace mgspec
