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

#include <boost/multiprecision/cpp_int.hpp>

namespace pathcell {

/// Exact integer used for every coefficient in the engine.
using Integer = boost::multiprecision::cpp_int;
/// Exact rational, used where forms or change-of-basis solves need division.
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace pathcell
