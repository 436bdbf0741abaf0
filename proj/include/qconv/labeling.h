// Copyright 2026 The qconv Authors
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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qconv {

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t seed, uint64_t value) {
    return mix64(seed ^ mix64(value));
}

/// A vertex-labeled structure to be put in canonical order.
///
/// `colors` and `pair_invariant` must not depend on how vertices are numbered.
/// `certificate(order)` encodes the structure relabeled so that position k holds
/// vertex order[k]; equal certificates must mean equal relabeled structures.
struct LabelingProblem {
    size_t num_vertices = 0;
    std::vector<uint64_t> colors;
    std::function<uint64_t(size_t, size_t)> pair_invariant;
    /// Optional. True when exchanging the two vertices maps the structure to itself.
    std::function<bool(size_t, size_t)> swap_is_automorphism;
    std::function<std::string(std::span<const size_t>)> certificate;
};

struct Labeling {
    std::string certificate;  // smallest certificate over the explored orderings
    std::vector<size_t> order;
    size_t leaves = 0;  // orderings whose certificate was computed
};

/// Individualization-refinement search for the minimum certificate.
///
/// Two isomorphic structures yield the same certificate.
Labeling canonical_labeling(const LabelingProblem &problem);

}  // namespace qconv
