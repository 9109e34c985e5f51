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

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pathcell/integer.hpp"
#include "pathcell/minimal.hpp"

namespace pathcell {

/// Rational functional on Omega_p, given by its values on the basis elements.
struct Form {
  std::size_t degree = 0;
  std::vector<Rational> values;

  friend bool operator==(const Form&, const Form&) = default;
};

/// Dual basis form: 1 on element i of degree p, 0 elsewhere.
Form basis_form(const MinimalBasis& basis, std::size_t p, std::size_t i);
/// Constant 0-form 1.
Form unit_form(const MinimalBasis& basis);
/// (d alpha)(P) = alpha(dP) on the degree p+1 basis.
Form coboundary(const MinimalBasis& basis, const Form& alpha);

struct CupWarning {
  std::size_t p = 0;
  std::size_t q = 0;
  std::string element;  // label of the degree p+q basis element
  Rational value;       // with the canonical complement
  Rational alternative; // with the reverse-order complement
};

/// Cup product on forms. For a basis element P = sum c_k p_k of degree p+q
/// the tensor T(P) = sum c_k front_p(p_k) (x) back_q(p_k) is reduced by
/// grouping terms with equal front and decomposing each bundle of backs in
/// Omega_q, then decomposing each resulting bundle of fronts in Omega_p.
/// Components outside Omega are dropped, which is the zero extension of the
/// forms over a fixed complement of Omega spanned by canonical unit vectors.
/// When that happens and the value depends on the complement, a warning
/// with both candidate values is recorded.
///
/// Structure-constant tables are built lazily; an engine must not be shared
/// between threads.
class CupEngine {
 public:
  explicit CupEngine(const MinimalBasis& basis);

  const MinimalBasis& basis() const noexcept { return basis_; }
  Form cup(const Form& alpha, const Form& beta);
  /// Coefficient of alpha_i (x) beta_j in (alpha cup beta)(P_r), with r
  /// indexing degree p+q.
  const std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>>& table(std::size_t p,
                                                                                          std::size_t q);
  /// Basis elements of degree p+q whose tensor leaves Omega_p (x) Omega_q.
  std::size_t residual_count(std::size_t p, std::size_t q);
  const std::vector<CupWarning>& warnings() const noexcept { return warnings_; }

 private:
  struct Extended;  // per-degree coordinates on A = Omega + complement
  struct Table {
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> canonical;
    std::map<std::size_t, std::vector<std::tuple<std::size_t, std::size_t, Rational>>> alternative;
  };
  const Extended& extended(std::size_t p, bool reverse);
  const Table& build(std::size_t p, std::size_t q);

  const MinimalBasis& basis_;
  std::map<std::pair<std::size_t, bool>, std::shared_ptr<Extended>> extended_;
  std::map<std::pair<std::size_t, std::size_t>, Table> tables_;
  std::vector<CupWarning> warnings_;  // first differing evaluation per element
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> warned_;
};

struct CupIdentityReport {
  bool leibniz = true;
  bool associativity = true;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::vector<std::string> failures;
};

/// Leibniz rule d(a cup b) = da cup b + (-1)^p a cup db and associativity,
/// exactly, for all basis forms. Both identities are multilinear, so the
/// basis forms cover every form.
CupIdentityReport check_cup_identities(CupEngine& engine);

/// Cup product computed through the subdivision: each form is moved to a
/// cochain on the Delta-complex (a cohomologous cocycle when the form is a
/// cocycle, an exact lift otherwise), multiplied by the front-face/back-face
/// formula and pulled back along the inclusion of Omega.
Form cup_oracle_delta(const MinimalBasis& basis, const Form& alpha, const Form& beta);

struct CupOracleReport {
  bool agree = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
};

/// For representatives of rational cohomology bases in all degrees, cup and
/// cup_oracle_delta give cohomologous cocycles.
CupOracleReport cup_cohomology_agreement(CupEngine& engine);

/// Rational cocycles spanning a complement of the coboundaries in degree p.
std::vector<Form> cohomology_representatives(const MinimalBasis& basis, std::size_t p);
/// x - y is a coboundary (both of degree p).
bool cohomologous(const MinimalBasis& basis, const Form& x, const Form& y);

}  // namespace pathcell
