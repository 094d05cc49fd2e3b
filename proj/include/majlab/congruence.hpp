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

#ifndef MAJLAB_CONGRUENCE_HPP_
#define MAJLAB_CONGRUENCE_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "relation.hpp"

namespace majlab {

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      // True if x and y were in different classes.
      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (x < y) {
          _parent[y] = x;
        } else {
          _parent[x] = y;
        }
        return true;
      }

     private:
      std::vector<std::size_t> _parent;
    };
  }  // namespace detail

  // A partition of {0, ..., n-1}. Blocks are numbered by their least
  // element, so two equal partitions have identical representations.
  // Compatibility with an algebra is not an invariant of the type; it is
  // guaranteed by every function below that returns a Congruence of an
  // algebra, and can be checked with find_incompatibility.
  class Congruence {
   public:
    Congruence() = default;

    static Congruence discrete(std::size_t n) {
      std::vector<std::size_t> labels(n);
      std::iota(labels.begin(), labels.end(), 0);
      return from_labels(labels);
    }

    static Congruence codiscrete(std::size_t n) {
      return from_labels(std::vector<std::size_t>(n, 0));
    }

    // Any labelling; elements with equal labels share a block.
    static Congruence from_labels(std::span<std::size_t const> labels) {
      Congruence c;
      c._block_of.resize(labels.size());
      std::vector<std::pair<std::size_t, std::size_t>> seen;
      for (std::size_t x = 0; x < labels.size(); ++x) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](auto const& p) {
          return p.first == labels[x];
        });
        if (it == seen.end()) {
          seen.emplace_back(labels[x], c._count);
          c._block_of[x] = c._count++;
        } else {
          c._block_of[x] = it->second;
        }
      }
      return c;
    }

    // Throws ParseError unless `blocks` partitions {0, ..., n-1}.
    static Congruence from_blocks(std::size_t n, std::vector<std::vector<Element>> const& blocks) {
      std::vector<std::size_t> labels(n, n);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
          throw ParseError("empty block in partition");
        }
        for (auto x : blocks[b]) {
          if (x >= n) {
            throw ParseError("block element " + std::to_string(x) + " out of range");
          }
          if (labels[x] != n) {
            throw ParseError("element " + std::to_string(x) + " occurs in two blocks");
          }
          labels[x] = b;
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (labels[x] == n) {
          throw ParseError("element " + std::to_string(x) + " is in no block");
        }
      }
      return from_labels(labels);
    }

    static Congruence from_relation(BinaryRelation const& R) {
      if (!R.is_equivalence()) {
        throw PreconditionError("relation is not an equivalence relation");
      }
      std::size_t const        n = R.size();
      std::vector<std::size_t> labels(n);
      for (Element x = 0; x < n; ++x) {
        Element y = 0;
        while (!R.contains(x, y)) {
          ++y;
        }
        labels[x] = y;
      }
      return from_labels(labels);
    }

    std::size_t size() const noexcept {
      return _block_of.size();
    }

    std::size_t block_count() const noexcept {
      return _count;
    }

    std::size_t block_of(Element x) const {
      return _block_of.at(x);
    }

    std::vector<std::size_t> const& labels() const noexcept {
      return _block_of;
    }

    bool related(Element a, Element b) const {
      return _block_of.at(a) == _block_of.at(b);
    }

    std::vector<std::vector<Element>> blocks() const {
      std::vector<std::vector<Element>> out(_count);
      for (Element x = 0; x < _block_of.size(); ++x) {
        out[_block_of[x]].push_back(x);
      }
      return out;
    }

    std::vector<Element> block_containing(Element a) const {
      std::vector<Element> out;
      for (Element x = 0; x < _block_of.size(); ++x) {
        if (_block_of[x] == _block_of.at(a)) {
          out.push_back(x);
        }
      }
      return out;
    }

    // Least element of each block, in block order.
    std::vector<Element> representatives() const {
      std::vector<Element> out(_count, 0);
      for (Element x = static_cast<Element>(_block_of.size()); x-- > 0;) {
        out[_block_of[x]] = x;
      }
      return out;
    }

    std::size_t pair_count() const {
      std::vector<std::size_t> sizes(_count, 0);
      for (auto b : _block_of) {
        ++sizes[b];
      }
      std::size_t c = 0;
      for (auto s : sizes) {
        c += s * s;
      }
      return c;
    }

    BinaryRelation relation() const {
      BinaryRelation R(size());
      for (Element a = 0; a < size(); ++a) {
        for (Element b = 0; b < size(); ++b) {
          if (related(a, b)) {
            R.add(a, b);
          }
        }
      }
      return R;
    }

    bool is_discrete() const {
      return _count == size();
    }

    // Refinement order.
    bool leq(Congruence const& that) const {
      check_same_size(that);
      for (Element a = 0; a < size(); ++a) {
        for (Element b = a + 1; b < size(); ++b) {
          if (related(a, b) && !that.related(a, b)) {
            return false;
          }
        }
      }
      return true;
    }

    bool operator==(Congruence const&) const = default;

    // Canonical order: fewer related pairs first (a linear extension of
    // refinement), then lexicographically by block lists.
    bool operator<(Congruence const& that) const {
      auto c1 = pair_count(), c2 = that.pair_count();
      if (c1 != c2) {
        return c1 < c2;
      }
      return blocks() < that.blocks();
    }

    void check_same_size(Congruence const& that) const {
      if (size() != that.size()) {
        throw PreconditionError("congruences on universes of different sizes");
      }
    }

   private:
    std::vector<std::size_t> _block_of;
    std::size_t              _count = 0;
  };

  // First operation and pair of argument tuples, differing in a single
  // position by theta-related elements, whose images are not related.
  struct CongruenceViolation {
    std::string op;
    Tuple       left;
    Tuple       right;
  };

  inline std::optional<CongruenceViolation> find_incompatibility(FiniteAlgebra const& A,
                                                                 Congruence const&    theta) {
    if (theta.size() != A.size()) {
      throw PreconditionError("congruence and algebra have different sizes");
    }
    std::size_t const n = A.size();
    for (std::size_t op = 0; op < A.number_of_operations(); ++op) {
      std::size_t const k = A.arity(op);
      if (k == 0) {
        continue;
      }
      Tuple args(k);
      // Each translation: position i varies, the other k-1 arguments fixed.
      std::size_t const others = *detail::checked_pow(n, k - 1, max_table_entries);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t idx = 0; idx < others; ++idx) {
          std::size_t rest = idx;
          for (std::size_t j = k; j-- > 0;) {
            if (j == i) {
              continue;
            }
            args[j] = static_cast<Element>(rest % n);
            rest /= n;
          }
          for (Element a = 0; a < n; ++a) {
            for (Element b = a + 1; b < n; ++b) {
              if (!theta.related(a, b)) {
                continue;
              }
              Tuple left = args, right = args;
              left[i]    = a;
              right[i]   = b;
              if (!theta.related(A.apply(op, left), A.apply(op, right))) {
                return CongruenceViolation{A.signature()[op].name, left, right};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_congruence(FiniteAlgebra const& A, Congruence const& theta) {
    return !find_incompatibility(A, theta).has_value();
  }

  // Least congruence identifying a and b, by closing the generating pairs
  // under all basic translations inside a union-find structure.
  inline Congruence principal_congruence(FiniteAlgebra const& A, Element a, Element b) {
    std::size_t const n = A.size();
    if (a >= n || b >= n) {
      throw PreconditionError("principal_congruence: element out of range");
    }
    detail::UnionFind                    uf(n);
    std::vector<std::pair<Element, Element>> queue;
    if (uf.unite(a, b)) {
      queue.emplace_back(a, b);
    }
    std::vector<std::size_t> others_count(A.number_of_operations(), 0);
    for (std::size_t op = 0; op < A.number_of_operations(); ++op) {
      if (A.arity(op) > 0) {
        others_count[op] = *detail::checked_pow(n, A.arity(op) - 1, max_table_entries);
      }
    }
    Tuple args;
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      for (std::size_t op = 0; op < A.number_of_operations(); ++op) {
        std::size_t const k = A.arity(op);
        args.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t idx = 0; idx < others_count[op]; ++idx) {
            std::size_t rest = idx;
            for (std::size_t j = k; j-- > 0;) {
              if (j == i) {
                continue;
              }
              args[j] = static_cast<Element>(rest % n);
              rest /= n;
            }
            args[i]   = u;
            Element x = A.apply(op, args);
            args[i]   = v;
            Element y = A.apply(op, args);
            if (uf.unite(x, y)) {
              queue.emplace_back(x, y);
            }
          }
        }
      }
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = uf.find(x);
    }
    return Congruence::from_labels(labels);
  }

  inline Congruence congruence_meet(Congruence const& theta, Congruence const& psi) {
    theta.check_same_size(psi);
    std::vector<std::size_t> labels(theta.size());
    for (Element x = 0; x < theta.size(); ++x) {
      labels[x] = theta.block_of(x) * psi.block_count() + psi.block_of(x);
    }
    return Congruence::from_labels(labels);
  }

  // Transitive closure of the union; a congruence whenever both inputs are.
  inline Congruence congruence_join(Congruence const& theta, Congruence const& psi) {
    theta.check_same_size(psi);
    detail::UnionFind uf(theta.size());
    for (auto const* c : {&theta, &psi}) {
      auto const reps = c->representatives();
      for (Element x = 0; x < c->size(); ++x) {
        uf.unite(x, reps[c->block_of(x)]);
      }
    }
    std::vector<std::size_t> labels(theta.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      labels[x] = uf.find(x);
    }
    return Congruence::from_labels(labels);
  }

  // Relational product; in general not an equivalence relation.
  inline BinaryRelation congruence_compose(Congruence const& theta, Congruence const& psi) {
    return compose(theta.relation(), psi.relation());
  }

  // Every congruence is a join of principal ones, so closing the principal
  // congruences under binary joins yields the whole lattice. This is far
  // cheaper than filtering all set partitions, whose number grows like the
  // Bell numbers. Sorted canonically; Delta first and nabla last.
  inline std::vector<Congruence> all_congruences(FiniteAlgebra const& A,
                                                 std::size_t          size_guard = 12) {
    if (A.size() > size_guard) {
      throw GuardExceeded("all_congruences: algebra \"" + A.name() + "\" has "
                          + std::to_string(A.size()) + " elements, guard is "
                          + std::to_string(size_guard));
    }
    std::set<std::vector<std::size_t>> seen;
    std::vector<Congruence>            result;
    auto insert = [&](Congruence const& c) {
      if (seen.insert(c.labels()).second) {
        result.push_back(c);
        return true;
      }
      return false;
    };
    insert(Congruence::discrete(A.size()));
    for (Element a = 0; a < A.size(); ++a) {
      for (Element b = a + 1; b < A.size(); ++b) {
        insert(principal_congruence(A, a, b));
      }
    }
    // Join everything found so far with every principal congruence until
    // nothing new appears.
    std::vector<Congruence> const principals(result.begin(), result.end());
    for (std::size_t i = 0; i < result.size(); ++i) {
      for (auto const& p : principals) {
        insert(congruence_join(result[i], p));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  inline Congruence kernel(Homomorphism const& f) {
    std::vector<std::size_t> labels(f.map().begin(), f.map().end());
    return Congruence::from_labels(labels);
  }

  struct Quotient {
    FiniteAlgebra algebra;
    Homomorphism  map;
  };

  // Blocks of theta become the elements 0, 1, ... in order of their least
  // elements.
  inline Quotient quotient(FiniteAlgebra const& A, Congruence const& theta) {
    if (auto bad = find_incompatibility(A, theta)) {
      throw PreconditionError("partition is not compatible with \"" + bad->op + "\": "
                              + detail::join_elements(bad->left) + " vs "
                              + detail::join_elements(bad->right));
    }
    std::size_t const                 m    = theta.block_count();
    auto const                        reps = theta.representatives();
    std::vector<std::vector<Element>> tables;
    for (std::size_t op = 0; op < A.number_of_operations(); ++op) {
      std::size_t const    k   = A.arity(op);
      std::size_t const    len = *detail::checked_pow(m, k, max_table_entries);
      std::vector<Element> table(len);
      Tuple                args(k);
      for (std::size_t idx = 0; idx < len; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = k; i-- > 0;) {
          args[i] = reps[rest % m];
          rest /= m;
        }
        table[idx] = static_cast<Element>(theta.block_of(A.apply(op, args)));
      }
      tables.push_back(std::move(table));
    }
    FiniteAlgebra Q(A.name() + "/theta", m, A.signature(), std::move(tables));
    std::vector<Element> map(A.size());
    for (Element x = 0; x < A.size(); ++x) {
      map[x] = static_cast<Element>(theta.block_of(x));
    }
    return Quotient{Q, Homomorphism(A, Q, std::move(map))};
  }

  // (f x f)(R) as a relation on the codomain.
  inline BinaryRelation image_of_relation(Homomorphism const& f, BinaryRelation const& R) {
    if (R.size() != f.domain().size()) {
      throw PreconditionError("relation does not live on the domain of f");
    }
    BinaryRelation out(f.codomain().size());
    for (auto [a, b] : R.pairs()) {
      out.add(f(a), f(b));
    }
    return out;
  }

  // (f x f)^{-1}(R) as a relation on the domain.
  inline BinaryRelation preimage_of_relation(Homomorphism const& f, BinaryRelation const& R) {
    if (R.size() != f.codomain().size()) {
      throw PreconditionError("relation does not live on the codomain of f");
    }
    BinaryRelation out(f.domain().size());
    for (Element a = 0; a < f.domain().size(); ++a) {
      for (Element b = 0; b < f.domain().size(); ++b) {
        if (R.contains(f(a), f(b))) {
          out.add(a, b);
        }
      }
    }
    return out;
  }

  // Does f^{-1} f(S) = K o S o K hold, K the kernel of f?
  inline bool check_inverse_image_identity(Homomorphism const& f, BinaryRelation const& S) {
    if (!f.is_surjective()) {
      throw PreconditionError("check_inverse_image_identity: f is not surjective");
    }
    if (auto bad = find_incompatibility(f.domain(), S)) {
      throw PreconditionError("check_inverse_image_identity: relation not compatible with \""
                              + bad->first + "\"");
    }
    BinaryRelation const K   = kernel(f).relation();
    BinaryRelation const lhs = preimage_of_relation(f, image_of_relation(f, S));
    BinaryRelation const rhs = compose(compose(K, S), K);
    return lhs == rhs;
  }

}  // namespace majlab

#endif  // MAJLAB_CONGRUENCE_HPP_
