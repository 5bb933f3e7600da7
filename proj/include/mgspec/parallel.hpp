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

#include <functional>

namespace mgspec {

int resolve_threads(int requested);

// Runs fn(0) .. fn(count - 1) on a worker pool. fn must not share mutable
// state across indices.
void parallel_for(long count, int threads, const std::function<void(long)>& fn);

}  // namespace mgspec
