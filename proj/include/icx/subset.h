// Copyright 2026 The icx Authors
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

#ifndef ICX_SUBSET_H_
#define ICX_SUBSET_H_

#include <bit>
#include <cstdint>
#include <vector>

namespace icx {

// A subset of actions, encoded as a bitmask over action indices.
using Subset = std::uint32_t;

inline constexpr int kMaxActions = 30;

inline constexpr Subset kEmptySet = 0;

inline constexpr Subset Singleton(int index) { return Subset{1} << index; }

inline constexpr Subset FullSet(int n) {
  return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline constexpr bool Contains(Subset s, int index) {
  return (s >> index) & 1u;
}

inline constexpr int Cardinality(Subset s) { return std::popcount(s); }

inline constexpr bool IsSubsetOf(Subset a, Subset b) { return (a & ~b) == 0; }

inline std::vector<int> Elements(Subset s) {
  std::vector<int> out;
  out.reserve(Cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline Subset FromElements(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) s |= Singleton(e);
  return s;
}

}  // namespace icx

#endif  // ICX_SUBSET_H_
