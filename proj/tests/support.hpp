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

// Shared fixtures for the test suites.

#ifndef MAJLAB_TESTS_SUPPORT_HPP_
#define MAJLAB_TESTS_SUPPORT_HPP_

#include <random>
#include <vector>

#include "majlab/majlab.hpp"

namespace majlab::testing {

  // The Klein group as Z2 x Z2, (a,b) encoded 2a + b.
  inline FiniteAlgebra klein() {
    return power(corpus::z2(), 2).algebra;
  }

  inline FiniteAlgebra l2_squared() {
    return power(corpus::lattice2(), 2).algebra;
  }

  // Congruences of the Klein group in canonical order.
  inline Congruence k_delta() {
    return Congruence::discrete(4);
  }
  inline Congruence k_alpha() {
    return Congruence::from_blocks(4, {{0, 1}, {2, 3}});
  }
  inline Congruence k_beta() {
    return Congruence::from_blocks(4, {{0, 2}, {1, 3}});
  }
  inline Congruence k_gamma() {
    return Congruence::from_blocks(4, {{0, 3}, {1, 2}});
  }
  inline Congruence k_nabla() {
    return Congruence::codiscrete(4);
  }

  // (x & y) | ((x & z) | (y & z)) over meet/join.
  inline TermExpr median_term() {
    auto x = TermExpr::variable(0), y = TermExpr::variable(1), z = TermExpr::variable(2);
    auto m = [](TermExpr a, TermExpr b) { return TermExpr::apply("meet", {a, b}); };
    auto j = [](TermExpr a, TermExpr b) { return TermExpr::apply("join", {a, b}); };
    return j(m(x, y), j(m(x, z), m(y, z)));
  }

  inline BinaryRelation random_relation(std::size_t n, double density, std::mt19937& rng) {
    std::bernoulli_distribution coin(density);
    BinaryRelation              R(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (coin(rng)) {
          R.add(a, b);
        }
      }
    }
    return R;
  }

  // Naive set-of-pairs view, for oracle comparisons.
  inline std::vector<std::vector<bool>> matrix(BinaryRelation const& R) {
    std::vector<std::vector<bool>> m(R.size(), std::vector<bool>(R.size(), false));
    for (auto [a, b] : R.pairs()) {
      m[a][b] = true;
    }
    return m;
  }

}  // namespace majlab::testing

#endif  // MAJLAB_TESTS_SUPPORT_HPP_
