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

// The bundled sample algebras.

#ifndef MAJLAB_CORPUS_HPP_
#define MAJLAB_CORPUS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace majlab::corpus {

  namespace detail {
    inline std::vector<Element> binary_table(std::size_t n,
                                             std::function<Element(Element, Element)> f) {
      std::vector<Element> t;
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          t.push_back(f(a, b));
        }
      }
      return t;
    }

    inline FiniteAlgebra chain(std::string name, std::size_t n) {
      auto meet = binary_table(n, [](Element a, Element b) { return std::min(a, b); });
      auto join = binary_table(n, [](Element a, Element b) { return std::max(a, b); });
      return FiniteAlgebra(std::move(name), n, Signature({{"meet", 2}, {"join", 2}}),
                           {meet, join});
    }

    inline FiniteAlgebra cyclic(std::string name, std::size_t n) {
      auto add = binary_table(n, [n](Element a, Element b) {
        return static_cast<Element>((a + b) % n);
      });
      return FiniteAlgebra(std::move(name), n, Signature({{"add", 2}}), {add});
    }
  }  // namespace detail

  // 2-element chain as a lattice.
  inline FiniteAlgebra lattice2() {
    return detail::chain("lattice2", 2);
  }

  // 0 < 1 < 2.
  inline FiniteAlgebra lattice3() {
    return detail::chain("lattice3", 3);
  }

  // The diamond: 0 bottom, atoms 1, 2, 3, top 4.
  inline FiniteAlgebra latticeM3() {
    auto leq = [](Element a, Element b) {
      return a == b || a == 0 || b == 4;
    };
    auto meet = detail::binary_table(5, [&](Element a, Element b) -> Element {
      if (leq(a, b)) {
        return a;
      }
      if (leq(b, a)) {
        return b;
      }
      return 0;
    });
    auto join = detail::binary_table(5, [&](Element a, Element b) -> Element {
      if (leq(a, b)) {
        return b;
      }
      if (leq(b, a)) {
        return a;
      }
      return 4;
    });
    return FiniteAlgebra("latticeM3", 5, Signature({{"meet", 2}, {"join", 2}}), {meet, join});
  }

  inline FiniteAlgebra z2() {
    return detail::cyclic("z2", 2);
  }

  inline FiniteAlgebra z3() {
    return detail::cyclic("z3", 3);
  }

  // Klein four-group; (a,b) is encoded as 2a + b, so addition is bitwise xor.
  inline FiniteAlgebra z2xz2() {
    auto add = detail::binary_table(4, [](Element a, Element b) { return a ^ b; });
    return FiniteAlgebra("z2xz2", 4, Signature({{"add", 2}}), {add});
  }

  // Permutations of {0,1,2} in lexicographic order (0 is the identity);
  // mul(p, q) = p after q.
  inline FiniteAlgebra s3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3>              p = {0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](std::array<int, 3> const& q) {
      return static_cast<Element>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    auto mul = detail::binary_table(6, [&](Element a, Element b) {
      std::array<int, 3> r{};
      for (int i = 0; i < 3; ++i) {
        r[i] = perms[a][perms[b][i]];
      }
      return index(r);
    });
    std::vector<Element> inv;
    for (Element a = 0; a < 6; ++a) {
      std::array<int, 3> r{};
      for (int i = 0; i < 3; ++i) {
        r[perms[a][i]] = i;
      }
      inv.push_back(index(r));
    }
    return FiniteAlgebra("s3", 6, Signature({{"mul", 2}, {"inv", 1}, {"e", 0}}),
                         {mul, inv, {0}});
  }

  // The 2-element unitary ring.
  inline FiniteAlgebra boolring2() {
    return FiniteAlgebra("boolring2", 2,
                         Signature({{"add", 2}, {"mul", 2}, {"zero", 0}, {"one", 0}}),
                         {{0, 1, 1, 0}, {0, 0, 0, 1}, {0}, {1}});
  }

  // {0,1} with the boolean majority function as its only operation.
  inline FiniteAlgebra majalg2() {
    return FiniteAlgebra("majalg2", 2, Signature({{"maj", 3}}), {{0, 0, 0, 1, 0, 1, 1, 1}});
  }

  // One element, one binary operation.
  inline FiniteAlgebra one() {
    return FiniteAlgebra("one", 1, Signature({{"op", 2}}), {{0}});
  }

  inline std::vector<FiniteAlgebra> all() {
    return {lattice2(), lattice3(), latticeM3(), z2(),      z3(),
            z2xz2(),    s3(),       boolring2(), majalg2(), one()};
  }

}  // namespace majlab::corpus

#endif  // MAJLAB_CORPUS_HPP_
