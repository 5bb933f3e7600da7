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

#include "mgspec/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mgspec {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t index) {
  return mix64(master_seed ^ mix64(index + 1));
}

double uniform_unit(Rng& rng) {
  // 53 random bits, mapped to (0, 1].
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("uniform_below: n must be positive");
  }
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw = rng();
  while (draw >= limit) {
    draw = rng();
  }
  return draw % n;
}

double gaussian(Rng& rng) {
  const double radius = std::sqrt(-2.0 * std::log(uniform_unit(rng)));
  const double angle = 2.0 * std::numbers::pi * uniform_unit(rng);
  return radius * std::cos(angle);
}

std::complex<double> complex_gaussian(Rng& rng) {
  const double radius = std::sqrt(-2.0 * std::log(uniform_unit(rng)));
  const double angle = 2.0 * std::numbers::pi * uniform_unit(rng);
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double exponential(Rng& rng) { return -std::log(uniform_unit(rng)); }

}  // namespace mgspec
