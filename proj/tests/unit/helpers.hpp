// Copyright 2026 The pathcell Authors
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
#include <utility>
#include <vector>

#include "pathcell/minimal.hpp"
#include "pathcell/paths.hpp"

namespace test {

/// "abd" -> path a, b, d in g (single-character vertex names).
inline pathcell::PrimitivePath path(const pathcell::Digraph& g, const std::string& letters) {
  pathcell::PrimitivePath p;
  for (char c : letters) p.push_back(g.index(std::string(1, c)));
  return p;
}

/// {{"abd", 1}, {"acd", -1}} as a path vector.
inline pathcell::PathVector vec(const pathcell::Digraph& g, std::vector<std::pair<std::string, long long>> terms) {
  pathcell::PathVector v;
  for (const auto& [letters, c] : terms) v.add(path(g, letters), c);
  return v;
}

/// Position of `p` among the degree-k basis elements, up to sign; -1 if absent.
inline long long index_of(const pathcell::MinimalBasis& b, std::size_t k, const pathcell::PathVector& p) {
  const auto& els = b.elements(k);
  for (std::size_t i = 0; i < els.size(); ++i)
    if (els[i].path == p || els[i].path == -p) return static_cast<long long>(i);
  return -1;
}

inline const char* kDiamond = "a -> b\na -> c\nb -> d\nc -> d\n";
inline const char* kTriangle = "a -> b\nb -> c\na -> c\n";
inline const char* kCycle3 = "a -> b\nb -> c\nc -> a\n";
inline const char* kAltSquare = "a -> b\nc -> b\nc -> d\na -> d\n";
inline const char* kInterval = "a -> b\n";

}  // namespace test
