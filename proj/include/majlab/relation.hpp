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

// Binary relations on {0, ..., n-1} stored as packed bit rows, and the
// relation calculus built on them: composition, meet, join, opposite,
// transitive closure and the transpose product.

#ifndef MAJLAB_RELATION_HPP_
#define MAJLAB_RELATION_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"

namespace majlab {

  class BinaryRelation {
    using word_type                       = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

   public:
    using pair_type = std::pair<Element, Element>;

    BinaryRelation() = default;

    explicit BinaryRelation(std::size_t n)
        : _n(n), _words((n + word_bits - 1) / word_bits), _bits(_n * _words, 0) {}

    BinaryRelation(std::size_t n, std::span<pair_type const> pairs) : BinaryRelation(n) {
      for (auto [a, b] : pairs) {
        add(a, b);
      }
    }

    BinaryRelation(std::size_t n, std::initializer_list<pair_type> pairs)
        : BinaryRelation(n, std::span<pair_type const>(pairs.begin(), pairs.size())) {}

    static BinaryRelation diagonal(std::size_t n) {
      BinaryRelation r(n);
      for (Element x = 0; x < n; ++x) {
        r.add(x, x);
      }
      return r;
    }

    static BinaryRelation full(std::size_t n) {
      BinaryRelation r(n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          r.add(x, y);
        }
      }
      return r;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    bool contains(Element a, Element b) const {
      return (_bits[a * _words + b / word_bits] >> (b % word_bits)) & 1U;
    }

    void add(Element a, Element b) {
      if (a >= _n || b >= _n) {
        throw PreconditionError("relation pair (" + std::to_string(a) + ","
                                + std::to_string(b) + ") out of range");
      }
      _bits[a * _words + b / word_bits] |= word_type(1) << (b % word_bits);
    }

    std::size_t pair_count() const {
      std::size_t c = 0;
      for (auto w : _bits) {
        c += std::popcount(w);
      }
      return c;
    }

    // Sorted lexicographically.
    std::vector<pair_type> pairs() const {
      std::vector<pair_type> out;
      for (Element a = 0; a < _n; ++a) {
        for (Element b = 0; b < _n; ++b) {
          if (contains(a, b)) {
            out.emplace_back(a, b);
          }
        }
      }
      return out;
    }

    bool is_reflexive() const {
      for (Element x = 0; x < _n; ++x) {
        if (!contains(x, x)) {
          return false;
        }
      }
      return true;
    }

    bool is_symmetric() const {
      for (Element a = 0; a < _n; ++a) {
        for (Element b = 0; b < _n; ++b) {
          if (contains(a, b) && !contains(b, a)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_transitive() const;

    bool is_equivalence() const {
      return is_reflexive() && is_symmetric() && is_transitive();
    }

    // Set inclusion.
    bool is_subset_of(BinaryRelation const& that) const {
      check_same_size(that);
      for (std::size_t i = 0; i < _bits.size(); ++i) {
        if (_bits[i] & ~that._bits[i]) {
          return false;
        }
      }
      return true;
    }

    // Least pair of *this that is not in `that`, if any.
    std::optional<pair_type> first_pair_not_in(BinaryRelation const& that) const {
      check_same_size(that);
      for (Element a = 0; a < _n; ++a) {
        for (std::size_t w = 0; w < _words; ++w) {
          word_type diff = _bits[a * _words + w] & ~that._bits[a * _words + w];
          if (diff != 0) {
            return pair_type{a, static_cast<Element>(w * word_bits + std::countr_zero(diff))};
          }
        }
      }
      return std::nullopt;
    }

    bool operator==(BinaryRelation const&) const = default;

    // Canonical order: fewer pairs first, then by bit pattern.
    bool operator<(BinaryRelation const& that) const {
      if (_n != that._n) {
        return _n < that._n;
      }
      auto c1 = pair_count(), c2 = that.pair_count();
      if (c1 != c2) {
        return c1 < c2;
      }
      return pairs() < that.pairs();
    }

    void check_same_size(BinaryRelation const& that) const {
      if (_n != that._n) {
        throw PreconditionError("relation size mismatch: " + std::to_string(_n) + " vs "
                                + std::to_string(that._n));
      }
    }

    friend BinaryRelation compose(BinaryRelation const&, BinaryRelation const&);
    friend BinaryRelation meet(BinaryRelation const&, BinaryRelation const&);
    friend BinaryRelation join(BinaryRelation const&, BinaryRelation const&);
    friend BinaryRelation transitive_closure(BinaryRelation);

   private:
    word_type* row(Element a) {
      return _bits.data() + a * _words;
    }
    word_type const* row(Element a) const {
      return _bits.data() + a * _words;
    }

    std::size_t            _n     = 0;
    std::size_t            _words = 0;
    std::vector<word_type> _bits;
  };

  // (x,z) in R o S iff (x,y) in R and (y,z) in S for some y.
  inline BinaryRelation compose(BinaryRelation const& R, BinaryRelation const& S) {
    R.check_same_size(S);
    BinaryRelation out(R._n);
    for (Element x = 0; x < R._n; ++x) {
      auto* dst = out.row(x);
      for (Element y = 0; y < R._n; ++y) {
        if (R.contains(x, y)) {
          auto const* src = S.row(y);
          for (std::size_t w = 0; w < R._words; ++w) {
            dst[w] |= src[w];
          }
        }
      }
    }
    return out;
  }

  inline BinaryRelation meet(BinaryRelation const& R, BinaryRelation const& S) {
    R.check_same_size(S);
    BinaryRelation out = R;
    for (std::size_t i = 0; i < out._bits.size(); ++i) {
      out._bits[i] &= S._bits[i];
    }
    return out;
  }

  // Set union (not the congruence join; see union_transitive_closure).
  inline BinaryRelation join(BinaryRelation const& R, BinaryRelation const& S) {
    R.check_same_size(S);
    BinaryRelation out = R;
    for (std::size_t i = 0; i < out._bits.size(); ++i) {
      out._bits[i] |= S._bits[i];
    }
    return out;
  }

  inline BinaryRelation opposite(BinaryRelation const& R) {
    BinaryRelation out(R.size());
    for (Element a = 0; a < R.size(); ++a) {
      for (Element b = 0; b < R.size(); ++b) {
        if (R.contains(a, b)) {
          out.add(b, a);
        }
      }
    }
    return out;
  }

  // Warshall on bit rows.
  inline BinaryRelation transitive_closure(BinaryRelation R) {
    for (Element k = 0; k < R._n; ++k) {
      auto const* rk = R.row(k);
      for (Element i = 0; i < R._n; ++i) {
        if (R.contains(i, k)) {
          auto* ri = R.row(i);
          for (std::size_t w = 0; w < R._words; ++w) {
            ri[w] |= rk[w];
          }
        }
      }
    }
    return R;
  }

  inline BinaryRelation union_transitive_closure(BinaryRelation const& R,
                                                 BinaryRelation const& S) {
    return transitive_closure(join(R, S));
  }

  inline bool BinaryRelation::is_transitive() const {
    return compose(*this, *this).is_subset_of(*this);
  }

  // Relation R1 x_T R2 on X x Y, where (x,y) is encoded as x * |Y| + y:
  // ((x,y),(x',y')) related iff (x,x') in R1 and (y,y') in R2.
  inline BinaryRelation transpose_product(BinaryRelation const& R1, BinaryRelation const& R2) {
    std::size_t const nx = R1.size(), ny = R2.size();
    BinaryRelation    out(nx * ny);
    for (Element x = 0; x < nx; ++x) {
      for (Element x2 = 0; x2 < nx; ++x2) {
        if (!R1.contains(x, x2)) {
          continue;
        }
        for (Element y = 0; y < ny; ++y) {
          for (Element y2 = 0; y2 < ny; ++y2) {
            if (R2.contains(y, y2)) {
              out.add(static_cast<Element>(x * ny + y), static_cast<Element>(x2 * ny + y2));
            }
          }
        }
      }
    }
    return out;
  }

  // Is R a subuniverse of A x A? Exhaustive over all tuples of pairs.
  inline std::optional<std::pair<std::string, std::vector<BinaryRelation::pair_type>>>
  find_incompatibility(FiniteAlgebra const& A, BinaryRelation const& R) {
    if (R.size() != A.size()) {
      throw PreconditionError("relation and algebra have different sizes");
    }
    auto const pairs = R.pairs();
    for (std::size_t op = 0; op < A.number_of_operations(); ++op) {
      std::size_t const k = A.arity(op);
      if (k == 0) {
        Element c = A.table(op)[0];
        if (!R.contains(c, c)) {
          return std::make_pair(A.signature()[op].name,
                                std::vector<BinaryRelation::pair_type>{});
        }
        continue;
      }
      if (pairs.empty()) {
        continue;
      }
      std::vector<std::size_t> pos(k, 0);
      Tuple                    left(k), right(k);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) {
          left[i]  = pairs[pos[i]].first;
          right[i] = pairs[pos[i]].second;
        }
        if (!R.contains(A.apply(op, left), A.apply(op, right))) {
          std::vector<BinaryRelation::pair_type> args;
          for (std::size_t i = 0; i < k; ++i) {
            args.push_back(pairs[pos[i]]);
          }
          return std::make_pair(A.signature()[op].name, args);
        }
        std::size_t i = k;
        while (i > 0 && ++pos[i - 1] == pairs.size()) {
          pos[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_compatible(FiniteAlgebra const& A, BinaryRelation const& R) {
    return !find_incompatibility(A, R).has_value();
  }

}  // namespace majlab

#endif  // MAJLAB_RELATION_HPP_
