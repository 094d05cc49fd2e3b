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

// Systems  x = a_i (mod theta_i),  i = 1..m,  over a finite algebra.

#ifndef MAJLAB_CRT_HPP_
#define MAJLAB_CRT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "clone.hpp"
#include "congruence.hpp"
#include "error.hpp"

namespace majlab {

  struct SystemRow {
    Congruence theta;
    Element    element;
  };

  class CongruenceSystem {
   public:
    // Every theta must be a congruence of A and every element in range.
    CongruenceSystem(FiniteAlgebra A, std::vector<SystemRow> rows)
        : _algebra(std::move(A)), _rows(std::move(rows)) {
      for (std::size_t i = 0; i < _rows.size(); ++i) {
        if (_rows[i].theta.size() != _algebra.size()) {
          throw PreconditionError("row " + std::to_string(i)
                                  + ": partition lives on a universe of the wrong size");
        }
        if (_rows[i].element >= _algebra.size()) {
          throw PreconditionError("row " + std::to_string(i) + ": element out of range");
        }
        if (auto bad = find_incompatibility(_algebra, _rows[i].theta)) {
          throw PreconditionError("row " + std::to_string(i)
                                  + ": partition is not a congruence (fails on \"" + bad->op
                                  + "\")");
        }
      }
    }

    FiniteAlgebra const& algebra() const noexcept {
      return _algebra;
    }

    std::vector<SystemRow> const& rows() const noexcept {
      return _rows;
    }

    std::size_t size() const noexcept {
      return _rows.size();
    }

    bool is_solution(Element x) const {
      for (auto const& r : _rows) {
        if (!r.theta.related(x, r.element)) {
          return false;
        }
      }
      return true;
    }

   private:
    FiniteAlgebra          _algebra;
    std::vector<SystemRow> _rows;
  };

  struct PairwiseResult {
    bool                                              solvable = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  };

  enum class SolveMethod { brute, constructive };

  inline char const* to_string(SolveMethod m) {
    return m == SolveMethod::brute ? "brute" : "constructive";
  }

  struct SolveReport {
    PairwiseResult         pairwise;
    std::optional<Element> solution;
    SolveMethod            method = SolveMethod::brute;
  };

  namespace detail {
    inline bool blocks_meet(SystemRow const& r, SystemRow const& s, std::size_t n) {
      for (Element x = 0; x < n; ++x) {
        if (r.theta.related(x, r.element) && s.theta.related(x, s.element)) {
          return true;
        }
      }
      return false;
    }

    // Least element satisfying the rows selected by `mask`.
    inline std::optional<Element> least_solution(CongruenceSystem const& sys,
                                                 std::uint64_t           mask) {
      for (Element x = 0; x < sys.algebra().size(); ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < sys.size() && ok; ++i) {
          if ((mask >> i) & 1U) {
            ok = sys.rows()[i].theta.related(x, sys.rows()[i].element);
          }
        }
        if (ok) {
          return x;
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  // First pair (i, j), i < j, whose blocks [a_i] and [a_j] are disjoint.
  inline PairwiseResult is_pairwise_solvable(CongruenceSystem const& sys) {
    for (std::size_t i = 0; i < sys.size(); ++i) {
      for (std::size_t j = i + 1; j < sys.size(); ++j) {
        if (!detail::blocks_meet(sys.rows()[i], sys.rows()[j], sys.algebra().size())) {
          return PairwiseResult{false, std::make_pair(i, j)};
        }
      }
    }
    return PairwiseResult{};
  }

  // Least element in the intersection of all the blocks, if any.
  inline SolveReport solve_brute(CongruenceSystem const& sys) {
    SolveReport rep;
    rep.pairwise = is_pairwise_solvable(sys);
    rep.method   = SolveMethod::brute;
    for (Element x = 0; x < sys.algebra().size(); ++x) {
      if (sys.is_solution(x)) {
        rep.solution = x;
        break;
      }
    }
    return rep;
  }

  // Solves a pairwise solvable system with a majority operation m. With
  // three or more rows, solve the three subsystems that omit the first,
  // second and third row respectively, obtaining x1, x2, x3, and return
  // m(x1, x2, x3). Row 1 holds because x2 and x3 both satisfy it, so
  // m(x1, x2, x3) ~ m(x1, a1, a1) = a1; rows 2 and 3 likewise; every later
  // row is satisfied by all of x1, x2, x3. Systems with at most two rows are
  // solved by intersecting blocks. Subsystems are memoised by row mask.
  inline SolveReport solve_constructive(CongruenceSystem const& sys, TermOperation const& m) {
    std::size_t const n = sys.algebra().size();
    if (m.arity() != 3 || m.universe() != n || !is_majority(m.table(), n)) {
      throw PreconditionError("solve_constructive: operation is not a majority operation");
    }
    if (sys.size() > 64) {
      throw PreconditionError("solve_constructive: at most 64 rows are supported");
    }
    SolveReport rep;
    rep.method   = SolveMethod::constructive;
    rep.pairwise = is_pairwise_solvable(sys);
    if (!rep.pairwise.solvable) {
      return rep;
    }
    std::unordered_map<std::uint64_t, Element> memo;
    auto solve = [&](auto&& self, std::uint64_t mask) -> Element {
      if (auto it = memo.find(mask); it != memo.end()) {
        return it->second;
      }
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < sys.size(); ++i) {
        if ((mask >> i) & 1U) {
          rows.push_back(i);
        }
      }
      Element x;
      if (rows.size() <= 2) {
        auto s = detail::least_solution(sys, mask);
        if (!s) {
          throw PreconditionError("solve_constructive: a subsystem is not solvable although "
                                  "the system is pairwise solvable");
        }
        x = *s;
      } else {
        Element x1 = self(self, mask & ~(std::uint64_t(1) << rows[0]));
        Element x2 = self(self, mask & ~(std::uint64_t(1) << rows[1]));
        Element x3 = self(self, mask & ~(std::uint64_t(1) << rows[2]));
        x          = m(x1, x2, x3);
      }
      memo.emplace(mask, x);
      return x;
    };
    std::uint64_t const all = sys.size() == 64 ? ~std::uint64_t(0)
                                               : (std::uint64_t(1) << sys.size()) - 1;
    Element x = solve(solve, all);
    if (!sys.is_solution(x)) {
      throw Error("solve_constructive: result " + std::to_string(x)
                  + " fails the row check; the operation is not a majority term of the "
                    "algebra");
    }
    rep.solution = x;
    return rep;
  }

}  // namespace majlab

#endif  // MAJLAB_CRT_HPP_
