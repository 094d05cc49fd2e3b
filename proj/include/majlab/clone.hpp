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

// k-ary term operations of a finite algebra A, generated as the subalgebra
// of A^(A^k) spanned by the k projections (the free algebra on k
// generators of the variety generated by A), and searches for majority and
// near-unanimity terms in it.

#ifndef MAJLAB_CLONE_HPP_
#define MAJLAB_CLONE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"

namespace majlab {

  // A function A^k -> A together with a term that induces it. The table uses
  // the same indexing as operation tables of FiniteAlgebra.
  class TermOperation {
   public:
    TermOperation(std::size_t universe, std::size_t arity, std::vector<Element> table,
                  TermExpr witness)
        : _universe(universe),
          _arity(arity),
          _table(std::move(table)),
          _witness(std::move(witness)) {
      auto len = detail::checked_pow(universe, arity, max_table_entries);
      if (!len || *len != _table.size()) {
        throw PreconditionError("term operation table has the wrong length");
      }
    }

    std::size_t universe() const noexcept {
      return _universe;
    }

    std::size_t arity() const noexcept {
      return _arity;
    }

    std::vector<Element> const& table() const noexcept {
      return _table;
    }

    TermExpr const& witness() const noexcept {
      return _witness;
    }

    Element operator()(std::span<Element const> args) const {
      std::size_t index = 0;
      for (auto a : args) {
        index = index * _universe + a;
      }
      return _table[index];
    }

    Element operator()(Element x, Element y, Element z) const {
      return _table[(x * _universe + y) * _universe + z];
    }

   private:
    std::size_t          _universe;
    std::size_t          _arity;
    std::vector<Element> _table;
    TermExpr             _witness;
  };

  struct CloneBudget {
    std::size_t coord_budget = 64;      // largest n^k
    std::size_t size_budget  = 100000;  // most term operations generated
  };

  // p(x,...,x,y,x,...,x) = x for y in every single position. For k = 3 this
  // is the majority identity.
  inline bool is_near_unanimity(std::span<Element const> table, std::size_t n, std::size_t k) {
    if (k < 3) {
      return false;
    }
    std::vector<std::size_t> weight(k);
    std::size_t              all = 0;
    for (std::size_t i = 0; i < k; ++i) {
      weight[i] = *detail::checked_pow(n, k - 1 - i, max_table_entries);
      all += weight[i];
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t pos = 0; pos < k; ++pos) {
          std::size_t index = x * (all - weight[pos]) + y * weight[pos];
          if (table[index] != x) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool is_majority(std::span<Element const> table, std::size_t n) {
    return table.size() == n * n * n && is_near_unanimity(table, n, 3);
  }

  // The generated set of k-ary term operations, in closure order:
  // projections x0, ..., x_{k-1} first, then breadth first by term depth,
  // operations in signature order, argument lists in lexicographic order of
  // their positions in the list.
  class CloneClosure {
   public:
    std::size_t universe() const noexcept {
      return _n;
    }

    std::size_t arity() const noexcept {
      return _k;
    }

    std::size_t size() const noexcept {
      return _witnesses.size();
    }

    // True if the whole clone was generated; false if a budget stopped it.
    bool exhausted() const noexcept {
      return _exhausted;
    }

    std::span<std::uint8_t const> row(std::size_t i) const {
      return {_data.data() + i * _coords, _coords};
    }

    TermExpr const& witness(std::size_t i) const {
      return _witnesses.at(i);
    }

    TermOperation operation(std::size_t i) const {
      auto                 r = row(i);
      std::vector<Element> table(r.begin(), r.end());
      return TermOperation(_n, _k, std::move(table), _witnesses.at(i));
    }

    friend CloneClosure generate_clone(FiniteAlgebra const&, std::size_t, CloneBudget const&);

   private:
    std::size_t               _n = 0, _k = 0, _coords = 0;
    std::vector<std::uint8_t> _data;
    std::vector<TermExpr>     _witnesses;
    bool                      _exhausted = false;
  };

  // Throws BudgetExceeded if n^k exceeds the coordinate budget; stops with
  // exhausted() == false when the size budget is reached.
  inline CloneClosure generate_clone(FiniteAlgebra const& A,
                                     std::size_t          k,
                                     CloneBudget const&   budget = {}) {
    std::size_t const n = A.size();
    if (n > 256) {
      throw BudgetExceeded("clone budget: algebras above 256 elements are not supported", 0);
    }
    auto coords = detail::checked_pow(n, k, budget.coord_budget);
    if (!coords) {
      throw BudgetExceeded("clone budget: " + std::to_string(n) + "^" + std::to_string(k)
                               + " coordinates exceed " + std::to_string(budget.coord_budget),
                           0);
    }
    CloneClosure cl;
    cl._n      = n;
    cl._k      = k;
    cl._coords = *coords;
    std::size_t const N = *coords;

    std::unordered_map<std::string, std::size_t> index;
    std::string                                   buf(N, '\0');
    // Returns false once the size budget is exhausted.
    auto add = [&](TermExpr const& t) {
      auto [it, inserted] = index.emplace(buf, cl._witnesses.size());
      if (inserted) {
        cl._data.insert(cl._data.end(), buf.begin(), buf.end());
        cl._witnesses.push_back(t);
      }
      return cl._witnesses.size() <= budget.size_budget;
    };

    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < N; ++c) {
        std::size_t digit = c;
        for (std::size_t j = k - 1; j > i; --j) {
          digit /= n;
        }
        buf[c] = static_cast<char>(digit % n);
      }
      add(TermExpr::variable(i));
    }

    auto const& sig = A.signature();
    // Terms of depth d have at least one argument of depth d-1; those sit in
    // [prev_start, end).
    std::size_t prev_start = 0;
    bool        first      = true;
    std::vector<std::size_t>  idx;
    std::vector<TermExpr>     kids;
    bool                      out_of_budget = false;
    while (true) {
      std::size_t const end = cl.size();
      for (std::size_t op = 0; op < sig.size() && !out_of_budget; ++op) {
        std::size_t const  arity = sig[op].arity;
        auto const&        table = A.table(op);
        if (arity == 0) {
          if (first) {
            std::fill(buf.begin(), buf.end(), static_cast<char>(table[0]));
            out_of_budget = !add(TermExpr::apply(sig[op].name, {}));
          }
          continue;
        }
        idx.assign(arity, 0);
        // Lexicographic walk over [0,end)^arity, skipping tuples made only of
        // old elements.
        auto has_new = [&](std::size_t upto) {
          for (std::size_t i = 0; i < upto; ++i) {
            if (idx[i] >= prev_start) {
              return true;
            }
          }
          return false;
        };
        if (!has_new(arity - 1)) {
          idx[arity - 1] = prev_start;
        }
        while (true) {
          for (std::size_t c = 0; c < N; ++c) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < arity; ++i) {
              t = t * n + cl._data[idx[i] * N + c];
            }
            buf[c] = static_cast<char>(table[t]);
          }
          kids.clear();
          for (std::size_t i = 0; i < arity; ++i) {
            kids.push_back(cl._witnesses[idx[i]]);
          }
          if (!add(TermExpr::apply(sig[op].name, kids))) {
            out_of_budget = true;
            break;
          }
          // Advance.
          std::size_t i = arity;
          while (i > 0) {
            if (++idx[i - 1] < end) {
              break;
            }
            idx[i - 1] = 0;
            --i;
          }
          if (i == 0) {
            break;
          }
          if (!has_new(arity - 1) && idx[arity - 1] < prev_start) {
            idx[arity - 1] = prev_start;
          }
        }
      }
      first = false;
      if (out_of_budget) {
        cl._exhausted = false;
        return cl;
      }
      if (cl.size() == end) {
        cl._exhausted = true;
        return cl;
      }
      prev_start = end;
    }
  }

  // All k-ary term operations, each with a witness term.
  inline std::vector<TermOperation> free_subpower(FiniteAlgebra const& A,
                                                  std::size_t          k,
                                                  CloneBudget const&   budget = {}) {
    auto cl = generate_clone(A, k, budget);
    if (!cl.exhausted()) {
      throw BudgetExceeded("clone budget: more than " + std::to_string(budget.size_budget)
                               + " term operations",
                           cl.size());
    }
    std::vector<TermOperation> out;
    out.reserve(cl.size());
    for (std::size_t i = 0; i < cl.size(); ++i) {
      out.push_back(cl.operation(i));
    }
    return out;
  }

  struct CloneSearchReport {
    std::optional<TermOperation> found;
    std::size_t                  generated_count = 0;
    // The full clone was generated, so a missing term really does not exist.
    bool exhausted = false;
  };

  // First k-ary near-unanimity operation in closure order. A budget stop
  // yields exhausted == false: "unknown", never "no".
  inline CloneSearchReport find_nu_term(FiniteAlgebra const& A,
                                        std::size_t          k,
                                        CloneBudget const&   budget = {}) {
    if (k < 3) {
      throw PreconditionError("find_nu_term: arity must be at least 3");
    }
    CloneSearchReport report;
    std::optional<CloneClosure> cl;
    try {
      cl = generate_clone(A, k, budget);
    } catch (BudgetExceeded const&) {
      return report;
    }
    report.generated_count = cl->size();
    report.exhausted       = cl->exhausted();
    for (std::size_t i = 0; i < cl->size(); ++i) {
      auto r = cl->row(i);
      std::vector<Element> table(r.begin(), r.end());
      if (is_near_unanimity(table, A.size(), k)) {
        report.found = TermOperation(A.size(), k, std::move(table), cl->witness(i));
        break;
      }
    }
    return report;
  }

  inline CloneSearchReport find_majority_term(FiniteAlgebra const& A,
                                              CloneBudget const&   budget = {}) {
    return find_nu_term(A, 3, budget);
  }

}  // namespace majlab

#endif  // MAJLAB_CLONE_HPP_
