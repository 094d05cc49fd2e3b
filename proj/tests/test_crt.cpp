//  Copyright 2026 The majlab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <random>

#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace majlab;
using namespace majlab::testing;

namespace {

  // Independent of the library: intersect the blocks by hand.
  std::vector<Element> all_solutions(CongruenceSystem const& sys) {
    std::vector<Element> out;
    for (Element x = 0; x < sys.algebra().size(); ++x) {
      bool ok = true;
      for (auto const& row : sys.rows()) {
        auto const block = row.theta.block_containing(row.element);
        ok = ok && std::find(block.begin(), block.end(), x) != block.end();
      }
      if (ok) {
        out.push_back(x);
      }
    }
    return out;
  }

  TermOperation majority_of(FiniteAlgebra const& A) {
    CloneBudget b;
    b.coord_budget = 1000;
    auto r         = find_majority_term(A, b);
    REQUIRE(r.found.has_value());
    return *r.found;
  }

}  // namespace

TEST_CASE("Klein system: pairwise solvable, not solvable", "[crt]") {
  CongruenceSystem const sys(klein(), {{k_alpha(), 0}, {k_beta(), 0}, {k_gamma(), 2}});
  auto const             pw = is_pairwise_solvable(sys);
  CHECK(pw.solvable);
  CHECK_FALSE(pw.failing_pair.has_value());
  auto const rep = solve_brute(sys);
  CHECK(rep.pairwise.solvable);
  CHECK_FALSE(rep.solution.has_value());
  CHECK(all_solutions(sys).empty());
}

TEST_CASE("pairwise failure names the first disjoint pair", "[crt]") {
  CongruenceSystem const sys(klein(), {{k_alpha(), 0}, {k_beta(), 0}, {k_alpha(), 2}});
  auto const             pw = is_pairwise_solvable(sys);
  CHECK_FALSE(pw.solvable);
  REQUIRE(pw.failing_pair.has_value());
  CHECK(*pw.failing_pair == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK_FALSE(solve_brute(sys).solution.has_value());
}

TEST_CASE("solvable systems", "[crt]") {
  CongruenceSystem const sys(klein(), {{k_alpha(), 1}, {k_beta(), 2}});
  auto const             rep = solve_brute(sys);
  REQUIRE(rep.solution.has_value());
  CHECK(*rep.solution == 0);
  CongruenceSystem const empty(klein(), {});
  CHECK(solve_brute(empty).solution == Element{0});
  CongruenceSystem const one_row(klein(), {{k_gamma(), 2}});
  CHECK(solve_brute(one_row).solution == Element{1});
}

TEST_CASE("system validation", "[crt]") {
  auto const L3 = corpus::lattice3();
  CHECK_THROWS_AS(CongruenceSystem(L3, {{Congruence::from_blocks(3, {{0, 2}, {1}}), 0}}),
                  PreconditionError);
  CHECK_THROWS_AS(CongruenceSystem(L3, {{Congruence::discrete(3), 3}}), PreconditionError);
  CHECK_THROWS_AS(CongruenceSystem(L3, {{Congruence::discrete(4), 0}}), PreconditionError);
}

TEST_CASE("constructive solver rejects non-majority operations", "[crt]") {
  CongruenceSystem const sys(l2_squared(), {});
  TermOperation const    proj(4, 3, std::vector<Element>(64, 0), TermExpr::variable(0));
  CHECK_THROWS_AS(solve_constructive(sys, proj), PreconditionError);
  auto const m2 = majority_of(corpus::lattice2());
  CHECK_THROWS_AS(solve_constructive(sys, m2), PreconditionError);
}

TEST_CASE("constructive solutions on random systems", "[crt][property]") {
  std::vector<FiniteAlgebra> const pool = {
      l2_squared(), corpus::lattice3(), power(corpus::lattice3(), 2).algebra,
      power(corpus::lattice2(), 3).algebra, corpus::latticeM3(),
      power(corpus::boolring2(), 3).algebra, power(corpus::majalg2(), 2).algebra};
  std::mt19937 rng(77);
  std::size_t  solved = 0, rejected = 0;
  for (auto const& A : pool) {
    INFO(A.name());
    auto const m = majority_of(A);
    auto const L = all_congruences(A);
    std::size_t here = 0;
    while (here < 40) {
      std::vector<SystemRow> rows;
      for (std::size_t i = 0, len = 1 + rng() % 6; i < len; ++i) {
        rows.push_back({L[rng() % L.size()], static_cast<Element>(rng() % A.size())});
      }
      CongruenceSystem const sys(A, rows);
      auto const             rep = solve_constructive(sys, m);
      auto const             sols = all_solutions(sys);
      if (!rep.pairwise.solvable) {
        // With a majority term pairwise solvability is also necessary.
        CHECK(sols.empty());
        CHECK_FALSE(rep.solution.has_value());
        ++rejected;
        continue;
      }
      REQUIRE(rep.solution.has_value());
      CHECK(rep.method == SolveMethod::constructive);
      CHECK(std::find(sols.begin(), sols.end(), *rep.solution) != sols.end());
      CHECK(solve_brute(sys).solution == sols.front());
      ++solved;
      ++here;
    }
  }
  CHECK(solved >= 100);
  CHECK(rejected > 0);
}

TEST_CASE("long system on L3^2", "[crt]") {
  auto const A = power(corpus::lattice3(), 2).algebra;
  auto const m = majority_of(A);
  auto const L = all_congruences(A);
  // Every row with target 4 = (1,1): always solvable, by 4 itself.
  std::vector<SystemRow> rows;
  for (std::size_t i = 0; i < 40; ++i) {
    rows.push_back({L[i % L.size()], 4});
  }
  CongruenceSystem const sys(A, rows);
  auto const             rep = solve_constructive(sys, m);
  REQUIRE(rep.solution.has_value());
  CHECK(sys.is_solution(*rep.solution));
}
