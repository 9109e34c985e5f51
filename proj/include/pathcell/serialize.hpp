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

#include <json.hpp>

#include "pathcell/cup.hpp"
#include "pathcell/cw.hpp"
#include "pathcell/finitetop.hpp"
#include "pathcell/homology.hpp"
#include "pathcell/minimal.hpp"

namespace pathcell {

using Json = nlohmann::json;

/// Integers become JSON numbers when they fit in 64 bits and decimal strings
/// otherwise; both forms are accepted on input.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
/// Rationals are always strings ("3", "-1/2").
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// {"betti":[..], "torsion":[[..]..], "coefficients":"z|q|zp"} plus "p" for zp.
Json to_json(const HomologyResult& r);
HomologyResult homology_from_json(const Json& j);

Json to_json(const Digraph& g);
Digraph digraph_from_json(const Json& j);
Json to_json(const Graph& g);

Json to_json(const Digraph& g, const PathVector& p);
PathVector path_vector_from_json(const Digraph& g, const Json& j);

/// Per degree: rank, allowed count, and each element with its endpoints.
Json to_json(const MinimalBasis& basis);

/// {"cells":[{"id","dim","label"}], "boundary":{"id":[[id,coeff],..]}}.
/// Only cells with a nonzero boundary appear under "boundary".
Json to_json(const CWComplexData& cw);
/// Cells come back without their paths.
CWComplexData cw_from_json(const Json& j);

/// Maximal simplices as vertex-name sequences.
Json to_json(const DeltaComplex& d, const Digraph& g);

/// {"points":[{"id","label","grade","min_open":[..]}]}.
Json to_json(const FiniteSpace& s);

/// {"degree": p, "values": {basis label: rational}}; zero values included.
Json to_json(const Form& f, const MinimalBasis& basis);
Form form_from_json(const Json& j, const MinimalBasis& basis);

Json to_json(const SphereCheckReport& r, const CWComplexData& cw);
Json to_json(const KunnethReport& r);
Json to_json(const LefschetzReport& r);
Json to_json(const GoodCoverReport& r);
Json to_json(const PoincareReport& r);
Json to_json(const CupIdentityReport& r);
Json to_json(const CupOracleReport& r);

}  // namespace pathcell
