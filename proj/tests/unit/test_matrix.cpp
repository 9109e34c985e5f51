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

#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pathcell/matrix.hpp"

using namespace pathcell;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      // Mostly zeros, like boundary matrices.
      if (rng() % 3 == 0) m(r, c) = static_cast<long long>(rng() % (2 * spread + 1)) - spread;
    }
  return m;
}

oracle::Dense to_dense(const IntMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

Integer det(const IntMatrix& m) {
  // Unimodularity check through the Smith form of the matrix itself.
  const auto rd = rank_and_elementary_divisors(m, false);
  if (rd.rank != m.rows()) return 0;
  Integer p = 1;
  for (const auto& d : rd.divisors) p *= d;
  return p;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  SUBCASE("identity") {
    const SmithForm s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.diagonal == IntMatrix::identity(3));
    CHECK(s.rank == 3);
  }
  SUBCASE("diag(2,3) becomes diag(1,6)") {
    const SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.diagonal == IntMatrix{{1, 0}, {0, 6}});
  }
  SUBCASE("zero matrix") {
    const SmithForm s = smith_normal_form(IntMatrix(2, 3));
    CHECK(s.diagonal.is_zero());
    CHECK(s.rank == 0);
  }
  SUBCASE("empty matrix") {
    const SmithForm s = smith_normal_form(IntMatrix(0, 4));
    CHECK(s.rank == 0);
    CHECK(s.right.rows() == 4);
  }
}

TEST_CASE("smith transforms are unimodular and reproduce D") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix a = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 4);
    const SmithForm s = smith_normal_form(a);
    CHECK(s.left * a * s.right == s.diagonal);
    CHECK(abs_value(det(s.left)) == 1);
    CHECK(abs_value(det(s.right)) == 1);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.diagonal(i + 1, i + 1) % s.diagonal(i, i) == 0);
    for (std::size_t i = 0; i < s.rank; ++i) CHECK(s.diagonal(i, i) > 0);
  }
}

TEST_CASE("elementary divisors match the textbook oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = random_matrix(rng, rng() % 8, rng() % 8, 3);
    const auto fast = rank_and_elementary_divisors(a, false);
    const auto slow = oracle::smith_diagonal(to_dense(a));
    CHECK(fast.rank == slow.size());
    CHECK(fast.divisors == slow);
    // The sparse path must agree with the dense one.
    CHECK(rank_and_elementary_divisors(SparseIntMatrix::from_dense(a), false).divisors == slow);
    CHECK(rational_rank(a) == oracle::rank_q(to_dense(a)));
  }
}

TEST_CASE("rank and elementary divisors") {
  auto r = rank_and_elementary_divisors(IntMatrix::identity(4));
  CHECK(r.rank == 4);
  CHECK(r.divisors.empty());
  r = rank_and_elementary_divisors(IntMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 0}});
  CHECK(r.rank == 2);
  CHECK(r.divisors == std::vector<Integer>{2});
  r = rank_and_elementary_divisors(IntMatrix{{1}, {-1}, {1}, {-1}});
  CHECK(r.rank == 1);
  CHECK(r.divisors.empty());
  r = rank_and_elementary_divisors(IntMatrix{{1}, {-1}, {1}, {-1}}, false);
  CHECK(r.divisors == std::vector<Integer>{1});
}

TEST_CASE("integer kernel basis") {
  SUBCASE("[1 -1]") {
    const IntMatrix k = integer_kernel_basis(IntMatrix{{1, -1}});
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == k(1, 0));
    CHECK(abs_value(k(0, 0)) == 1);
  }
  SUBCASE("[2] has no kernel") { CHECK(integer_kernel_basis(IntMatrix{{2}}).cols() == 0); }
  SUBCASE("boundary of the directed 3-cycle") {
    // Columns ab, bc, ca; rows a, b, c.
    const IntMatrix d1{{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}};
    const IntMatrix k = integer_kernel_basis(d1);
    REQUIRE(k.cols() == 1);
    CHECK(abs_value(k(0, 0)) == 1);
    CHECK(k(0, 0) == k(1, 0));
    CHECK(k(1, 0) == k(2, 0));
  }
  SUBCASE("random kernels are annihilated and saturated") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 80; ++trial) {
      const IntMatrix a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 7, 5);
      const IntMatrix k = integer_kernel_basis(a);
      CHECK((a * k).is_zero());
      CHECK(k.cols() == a.cols() - rational_rank(a));
      if (k.cols() > 0) {
        const auto rd = rank_and_elementary_divisors(k);
        CHECK(rd.rank == k.cols());
        CHECK(rd.divisors.empty());
      }
      // Same lattice as the oracle's kernel: each basis solves the other.
      const auto other = oracle::integer_kernel(to_dense(a), a.cols());
      const std::size_t nullity = other.empty() ? 0 : other[0].size();
      CHECK(nullity == k.cols());
      if (k.cols() > 0) {
        LatticeSolver solver(k);
        for (std::size_t c = 0; c < nullity; ++c) {
          std::vector<Integer> v;
          for (const auto& row : other) v.push_back(row[c]);
          CHECK(solver.solve(v).has_value());
        }
      }
    }
  }
}

TEST_CASE("lattice solver") {
  const IntMatrix b{{1, 0}, {1, 2}, {0, 1}};
  LatticeSolver s(b);
  const std::vector<Integer> in{3, 7, 2};
  const auto y = s.solve(in);
  REQUIRE(y);
  CHECK((*y)[0] == 3);
  CHECK((*y)[1] == 2);
  const std::vector<Integer> half{0, 1, 0};
  CHECK_FALSE(s.solve(half).has_value());
  const std::vector<Integer> outside{1, 0, 0};
  CHECK_FALSE(s.solve(outside).has_value());
}

TEST_CASE("rational matrices") {
  const RationalMatrix a(IntMatrix{{2, 1}, {1, 1}});
  const RationalMatrix inv = inverse(a);
  const RationalMatrix id = a * inv;
  CHECK(id(0, 0) == 1);
  CHECK(id(0, 1) == 0);
  CHECK(id(1, 0) == 0);
  CHECK(id(1, 1) == 1);
  CHECK(rank(RationalMatrix(IntMatrix{{1, 2}, {2, 4}})) == 1);
  const auto ns = nullspace(RationalMatrix(IntMatrix{{1, 2}, {2, 4}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + 2 * ns[0][1] == 0);
}

TEST_CASE("large entries stay exact") {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543210");
  const auto r = rank_and_elementary_divisors(a);
  REQUIRE(r.divisors.size() == 2);
  CHECK(r.divisors[0] * r.divisors[1] == a(0, 0) * a(1, 1));
  CHECK(r.divisors[1] % r.divisors[0] == 0);
}
