// Copyright 2026 The qemlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QEMLAB_SEEDS_HPP
#define QEMLAB_SEEDS_HPP

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace qemlab {

std::uint64_t fnv1a64(std::string_view bytes);

std::uint64_t splitmix64(std::uint64_t x);

/// Stable seed for a task identified by integer coordinates under a master
/// seed. Independent of evaluation order, so tasks can run in any order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> coordinates);

/// Coordinate for a textual tag (pipeline name, purpose).
inline std::uint64_t tag(std::string_view name) { return fnv1a64(name); }

}  // namespace qemlab

#endif  // QEMLAB_SEEDS_HPP
