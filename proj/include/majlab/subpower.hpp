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

// Subuniverses of finite products A_1 x ... x A_k ("subpowers"): closure,
// enumeration, coordinate projections (J-images), the pairwise pullback
// reconstruction, the majority-selecting Horn condition, and direct
// decomposability of reflexive relations on a binary product.

#ifndef MAJLAB_SUBPOWER_HPP_
#define MAJLAB_SUBPOWER_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "relation.hpp"

namespace majlab {

  using Factors = std::vector<FiniteAlgebra>;

  ////////////////////////////////////////////////////////////////////////
  // SubPower
  ////////////////////////////////////////////////////////////////////////

  // A set of tuples over a list of factor algebras, kept sorted
  // lexicographically without duplicates. Closure under the operations is
  // not enforced on construction (is_closed checks it), so the same type
  // also carries intermediate results such as pullback reconstructions.
  class SubPower {
   public:
    SubPower() = default;

    SubPower(std::shared_ptr<Factors const> factors, std::vector<Tuple> tuples)
        : _factors(std::move(factors)), _tuples(std::move(tuples)) {
      if (!_factors || _factors->empty()) {
        throw PreconditionError("subpower needs at least one factor");
      }
      for (auto const& t : _tuples) {
        if (t.size() != _factors->size()) {
          throw PreconditionError("tuple " + detail::join_elements(t)
                                  + " has the wrong number of coordinates");
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (t[i] >= (*_factors)[i].size()) {
            throw PreconditionError("tuple " + detail::join_elements(t) + ": coordinate "
                                    + std::to_string(i) + " out of range");
          }
        }
      }
      std::sort(_tuples.begin(), _tuples.end());
      _tuples.erase(std::unique(_tuples.begin(), _tuples.end()), _tuples.end());
    }

    SubPower(Factors factors, std::vector<Tuple> tuples)
        : SubPower(std::make_shared<Factors const>(std::move(factors)), std::move(tuples)) {}

    Factors const& factors() const {
      return *_factors;
    }

    std::shared_ptr<Factors const> const& shared_factors() const {
      return _factors;
    }

    std::size_t arity() const {
      return _factors->size();
    }

    std::size_t size() const noexcept {
      return _tuples.size();
    }

    bool empty() const noexcept {
      return _tuples.empty();
    }

    std::vector<Tuple> const& tuples() const noexcept {
      return _tuples;
    }

    bool contains(Tuple const& t) const {
      return std::binary_search(_tuples.begin(), _tuples.end(), t);
    }

    bool is_subset_of(SubPower const& that) const {
      return std::includes(that._tuples.begin(), that._tuples.end(), _tuples.begin(),
                           _tuples.end());
    }

    // Exhaustive coordinatewise closure check; returns the first operation
    // and argument tuples (lexicographic) whose result is missing.
    std::optional<std::pair<std::string, std::vector<Tuple>>> closure_violation() const {
      auto const& fs = *_factors;
      auto const& sig = fs[0].signature();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        std::size_t const        k = sig[op].arity;
        std::vector<std::size_t> pos(k, 0);
        Tuple                    result(arity()), fargs(k);
        if (k > 0 && _tuples.empty()) {
          continue;
        }
        while (true) {
          for (std::size_t c = 0; c < arity(); ++c) {
            for (std::size_t i = 0; i < k; ++i) {
              fargs[i] = _tuples[pos[i]][c];
            }
            result[c] = fs[c].apply(op, fargs);
          }
          if (!contains(result)) {
            std::vector<Tuple> args;
            for (std::size_t i = 0; i < k; ++i) {
              args.push_back(_tuples[pos[i]]);
            }
            return std::make_pair(sig[op].name, args);
          }
          std::size_t i = k;
          while (i > 0 && ++pos[i - 1] == _tuples.size()) {
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

    bool is_closed() const {
      return !closure_violation().has_value();
    }

    bool operator==(SubPower const& that) const {
      return _tuples == that._tuples && *_factors == *that._factors;
    }

   private:
    std::shared_ptr<Factors const> _factors;
    std::vector<Tuple>             _tuples;
  };

  ////////////////////////////////////////////////////////////////////////
  // SubpowerEngine
  ////////////////////////////////////////////////////////////////////////

  // Closure machinery over a fixed list of factors. Tuples are handled as
  // mixed-radix keys (leftmost coordinate most significant). Membership is
  // tracked with an epoch-stamped array over the whole product, so an
  // engine instance is not safe for concurrent use; create one per thread.
  class SubpowerEngine {
   public:
    using key_type = std::uint64_t;

    static constexpr std::size_t default_universe_guard = std::size_t(1) << 24;

    explicit SubpowerEngine(Factors factors, std::size_t universe_guard = default_universe_guard)
        : _factors(std::make_shared<Factors const>(std::move(factors))) {
      auto const& fs = *_factors;
      if (fs.empty()) {
        throw PreconditionError("subpower engine needs at least one factor");
      }
      for (auto const& f : fs) {
        if (!(f.signature() == fs[0].signature())) {
          throw PreconditionError("signature mismatch between factors");
        }
        if (_universe > universe_guard / f.size()) {
          throw GuardExceeded("product of factors exceeds " + std::to_string(universe_guard)
                              + " tuples");
        }
        _universe *= f.size();
        _radix.push_back(f.size());
      }
      _stamp.assign(_universe, 0);
    }

    std::shared_ptr<Factors const> const& shared_factors() const noexcept {
      return _factors;
    }

    Factors const& factors() const noexcept {
      return *_factors;
    }

    std::size_t arity() const noexcept {
      return _radix.size();
    }

    std::size_t universe_size() const noexcept {
      return _universe;
    }

    key_type encode(std::span<Element const> t) const {
      key_type k = 0;
      for (std::size_t i = 0; i < _radix.size(); ++i) {
        k = k * _radix[i] + t[i];
      }
      return k;
    }

    Tuple decode(key_type k) const {
      Tuple t(_radix.size());
      decode_into(k, t.data());
      return t;
    }

    SubPower to_subpower(std::span<key_type const> keys) const {
      std::vector<Tuple> tuples;
      tuples.reserve(keys.size());
      for (auto k : keys) {
        tuples.push_back(decode(k));
      }
      return SubPower(_factors, std::move(tuples));
    }

    // Least subuniverse containing `closed` and `extra`. `closed` must
    // already be closed (it may be empty). Result in discovery order.
    std::vector<key_type> close(std::span<key_type const> closed, std::span<key_type const> extra) {
      next_epoch();
      std::size_t const     w = arity();
      std::vector<key_type> keys;
      std::vector<Element>  coords;
      auto add = [&](key_type k) {
        if (_stamp[k] != _epoch) {
          _stamp[k] = _epoch;
          keys.push_back(k);
          coords.resize(coords.size() + w);
          decode_into(k, coords.data() + coords.size() - w);
        }
      };
      for (auto k : closed) {
        add(k);
      }
      std::size_t old_end = keys.size();
      if (closed.empty()) {
        // Constants belong to every subuniverse.
        auto const& sig = factors()[0].signature();
        for (std::size_t op = 0; op < sig.size(); ++op) {
          if (sig[op].arity == 0) {
            Tuple t(w);
            for (std::size_t c = 0; c < w; ++c) {
              t[c] = factors()[c].table(op)[0];
            }
            add(encode(t));
          }
        }
      }
      for (auto k : extra) {
        if (k >= _universe) {
          throw PreconditionError("generator out of range");
        }
        add(k);
      }

      auto const&              sig = factors()[0].signature();
      std::vector<std::size_t> idx;
      Tuple                    result(w);
      while (old_end < keys.size() && keys.size() < _universe) {
        std::size_t const end = keys.size();
        for (std::size_t op = 0; op < sig.size(); ++op) {
          std::size_t const k = sig[op].arity;
          if (k == 0) {
            continue;
          }
          idx.assign(k, 0);
          // Tuples of indices in [0,end)^k with at least one index >= old_end,
          // split by the position p of the first such index.
          for (std::size_t p = 0; p < k; ++p) {
            if (p > 0 && old_end == 0) {
              break;
            }
            auto lo = [&](std::size_t i) -> std::size_t {
              return i == p ? old_end : 0;
            };
            auto hi = [&](std::size_t i) -> std::size_t {
              return i < p ? old_end : end;
            };
            for (std::size_t i = 0; i < k; ++i) {
              idx[i] = lo(i);
            }
            while (true) {
              for (std::size_t c = 0; c < w; ++c) {
                std::size_t t = 0;
                for (std::size_t i = 0; i < k; ++i) {
                  t = t * _radix[c] + coords[idx[i] * w + c];
                }
                result[c] = factors()[c].table(op)[t];
              }
              add(encode(result));
              if (keys.size() == _universe) {
                return keys;
              }
              std::size_t i = k;
              while (i > 0) {
                if (++idx[i - 1] < hi(i - 1)) {
                  break;
                }
                idx[i - 1] = lo(i - 1);
                --i;
              }
              if (i == 0) {
                break;
              }
            }
          }
        }
        old_end = end;
      }
      return keys;
    }

    std::vector<key_type> generate(std::span<key_type const> generators) {
      return close({}, generators);
    }

   private:
    void decode_into(key_type k, Element* out) const {
      for (std::size_t i = _radix.size(); i-- > 0;) {
        out[i] = static_cast<Element>(k % _radix[i]);
        k /= _radix[i];
      }
    }

    void next_epoch() {
      if (++_epoch == 0) {
        std::fill(_stamp.begin(), _stamp.end(), 0);
        _epoch = 1;
      }
    }

    std::shared_ptr<Factors const> _factors;
    std::vector<std::size_t>       _radix;
    std::size_t                    _universe = 1;
    std::vector<std::uint32_t>     _stamp;
    std::uint32_t                  _epoch = 0;
  };

  // Least subpower of factors[0] x ... containing `generators`, closed
  // under all operations coordinatewise. An empty result is rejected.
  inline SubPower generate_subpower(Factors const& factors, std::vector<Tuple> const& generators) {
    SubpowerEngine                        engine(factors);
    std::vector<SubpowerEngine::key_type> keys;
    for (auto const& g : generators) {
      if (g.size() != factors.size()) {
        throw PreconditionError("generator " + detail::join_elements(g)
                                + " has the wrong number of coordinates");
      }
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] >= factors[i].size()) {
          throw PreconditionError("generator " + detail::join_elements(g) + ": coordinate "
                                  + std::to_string(i) + " out of range");
        }
      }
      keys.push_back(engine.encode(g));
    }
    auto closed = engine.generate(keys);
    if (closed.empty()) {
      throw PreconditionError("empty subalgebra undefined");
    }
    return engine.to_subpower(closed);
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration of subuniverses
  ////////////////////////////////////////////////////////////////////////

  struct EnumerationOptions {
    // Number of generators allowed beyond the base set.
    std::size_t max_extra_generators = std::numeric_limits<std::size_t>::max();
    // Stop after this many distinct subuniverses.
    std::size_t max_count = std::numeric_limits<std::size_t>::max();
    // After hitting max_extra_generators, check whether one more generator
    // would have produced anything new.
    bool probe_completeness = true;
  };

  struct EnumerationStats {
    std::size_t count           = 0;
    std::size_t levels          = 0;
    bool        complete        = false;  // every subuniverse containing base was visited
    bool        budget_exceeded = false;
    bool        stopped         = false;  // the visitor asked to stop
  };

  // Visits every subuniverse that contains the closure of `base` and is
  // generated over it by at most max_extra_generators further elements.
  // Order: breadth first by number of extra generators, then by the order
  // in which the parent was found and the key of the added element. The
  // visitor receives the sorted key list and returns false to stop. The
  // empty set is never visited.
  template <typename Visitor>
  EnumerationStats enumerate_subuniverses(SubpowerEngine&                           engine,
                                          std::span<SubpowerEngine::key_type const> base,
                                          EnumerationOptions const&                 opts,
                                          Visitor&&                                 visit) {
    using key_type = SubpowerEngine::key_type;
    using set_type = std::vector<key_type>;
    struct Hash {
      std::size_t operator()(set_type const& s) const noexcept {
        std::size_t h = s.size();
        for (auto k : s) {
          h ^= std::hash<key_type>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };
    std::unordered_set<set_type, Hash> seen;
    EnumerationStats                   stats;

    // Returns false when enumeration must stop.
    auto found = [&](set_type s, std::vector<set_type>& level) {
      std::sort(s.begin(), s.end());
      if (s.empty() || !seen.insert(s).second) {
        return true;
      }
      ++stats.count;
      if (!visit(static_cast<set_type const&>(s))) {
        stats.stopped = true;
        return false;
      }
      level.push_back(std::move(s));
      if (stats.count >= opts.max_count) {
        stats.budget_exceeded = true;
        return false;
      }
      return true;
    };

    std::vector<set_type> current;
    {
      set_type start = engine.generate(base);
      if (start.empty()) {
        current.emplace_back();
      } else if (!found(start, current)) {
        return stats;
      }
    }
    key_type const universe = engine.universe_size();
    // Sg(S + t) = Sg(S + P_t) with P_t = Sg(base + t); elements t sharing the
    // same P_t give the same result, so each S is closed once per distinct
    // P_t.
    std::vector<std::size_t> principal_id(universe, std::numeric_limits<std::size_t>::max());
    std::vector<set_type>    principals;
    std::map<set_type, std::size_t> principal_index;
    auto principal = [&](key_type t) -> std::size_t {
      auto& id = principal_id[t];
      if (id == std::numeric_limits<std::size_t>::max()) {
        std::vector<key_type> gens(base.begin(), base.end());
        gens.push_back(t);
        set_type P = engine.generate(gens);
        std::sort(P.begin(), P.end());
        auto [it, inserted] = principal_index.emplace(std::move(P), principals.size());
        if (inserted) {
          principals.push_back(it->first);
        }
        id = it->second;
      }
      return id;
    };
    // Calls step(T) for each Sg(S + t), t outside S, in order of t.
    auto extend = [&](set_type const& S, auto&& step) {
      std::vector<bool> used;
      for (key_type t = 0; t < universe; ++t) {
        if (std::binary_search(S.begin(), S.end(), t)) {
          continue;
        }
        std::size_t const id = principal(t);
        if (id >= used.size()) {
          used.resize(id + 1, false);
        }
        if (used[id]) {
          continue;
        }
        used[id] = true;
        if (!step(engine.close(S, principals[id]))) {
          return false;
        }
      }
      return true;
    };
    while (true) {
      if (stats.levels == opts.max_extra_generators) {
        break;
      }
      ++stats.levels;
      std::vector<set_type> next;
      for (auto const& S : current) {
        if (!extend(S, [&](set_type T) { return found(std::move(T), next); })) {
          return stats;
        }
      }
      if (next.empty()) {
        stats.complete = true;
        return stats;
      }
      current = std::move(next);
    }
    if (opts.probe_completeness) {
      for (auto const& S : current) {
        bool const all_seen = extend(S, [&](set_type T) {
          std::sort(T.begin(), T.end());
          return seen.contains(T);
        });
        if (!all_seen) {
          return stats;
        }
      }
      stats.complete = true;
    }
    return stats;
  }

  // All reflexive relations on B compatible with its operations (i.e. the
  // subuniverses of B x B containing the diagonal), sorted canonically. At
  // most `budget` relations are produced; `complete` reports whether the
  // list is exhaustive.
  struct RelationFamily {
    std::vector<BinaryRelation> relations;
    bool                        complete = false;
  };

  inline RelationFamily reflexive_compatible_relations(FiniteAlgebra const& B,
                                                       std::size_t          budget) {
    SubpowerEngine                        engine(Factors{B, B});
    std::vector<SubpowerEngine::key_type> diagonal;
    for (Element x = 0; x < B.size(); ++x) {
      diagonal.push_back(engine.encode(Tuple{x, x}));
    }
    RelationFamily     family;
    EnumerationOptions opts;
    opts.max_count = budget;
    auto stats     = enumerate_subuniverses(engine, diagonal, opts, [&](auto const& keys) {
      BinaryRelation R(B.size());
      for (auto k : keys) {
        R.add(static_cast<Element>(k / B.size()), static_cast<Element>(k % B.size()));
      }
      family.relations.push_back(std::move(R));
      return true;
    });
    family.complete = stats.complete;
    std::sort(family.relations.begin(), family.relations.end());
    return family;
  }

  ////////////////////////////////////////////////////////////////////////
  // J-images and the pairwise reconstruction
  ////////////////////////////////////////////////////////////////////////

  inline SubPower j_image(SubPower const& S, std::span<std::size_t const> J) {
    if (J.empty()) {
      throw PreconditionError("j_image: index list is empty");
    }
    Factors factors;
    for (std::size_t a = 0; a < J.size(); ++a) {
      if (J[a] >= S.arity()) {
        throw PreconditionError("j_image: invalid index " + std::to_string(J[a]));
      }
      for (std::size_t b = 0; b < a; ++b) {
        if (J[a] == J[b]) {
          throw PreconditionError("j_image: repeated index " + std::to_string(J[a]));
        }
      }
      factors.push_back(S.factors()[J[a]]);
    }
    std::vector<Tuple> tuples;
    tuples.reserve(S.size());
    for (auto const& t : S.tuples()) {
      Tuple u;
      for (auto j : J) {
        u.push_back(t[j]);
      }
      tuples.push_back(std::move(u));
    }
    return SubPower(std::move(factors), std::move(tuples));
  }

  inline SubPower j_image(SubPower const& S, std::initializer_list<std::size_t> J) {
    return j_image(S, std::span<std::size_t const>(J.begin(), J.size()));
  }

  using PairImages = std::map<std::pair<std::size_t, std::size_t>, SubPower>;

  // All {i,j}-images with i < j.
  inline PairImages pairwise_images(SubPower const& S) {
    PairImages out;
    for (std::size_t i = 0; i < S.arity(); ++i) {
      for (std::size_t j = i + 1; j < S.arity(); ++j) {
        out.emplace(std::make_pair(i, j), j_image(S, {i, j}));
      }
    }
    return out;
  }

  // Largest set of tuples x with (x_i, x_j) in images[{i,j}] for every
  // given pair. Enumerated by backtracking in lexicographic order.
  inline SubPower pullback_reconstruct(Factors const& factors, PairImages const& images) {
    std::size_t const k = factors.size();
    if (k == 0) {
      throw PreconditionError("pullback_reconstruct: no factors");
    }
    // allowed[i][j] is an |A_i| x |A_j| membership table (i < j).
    std::vector<std::vector<std::vector<bool>>> allowed(k, std::vector<std::vector<bool>>(k));
    for (auto const& [ij, R] : images) {
      auto [i, j] = ij;
      if (i >= k || j >= k || i == j) {
        throw PreconditionError("pullback_reconstruct: invalid index pair");
      }
      if (R.arity() != 2 || R.factors()[0].size() != factors[i].size()
          || R.factors()[1].size() != factors[j].size()) {
        throw PreconditionError("pullback_reconstruct: inconsistent factor sizes for pair ("
                                + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      bool const swap = i > j;
      auto       lo = std::min(i, j), hi = std::max(i, j);
      auto&      table = allowed[lo][hi];
      if (table.empty()) {
        table.assign(factors[lo].size() * factors[hi].size(), true);
      }
      std::vector<bool> member(factors[lo].size() * factors[hi].size(), false);
      for (auto const& t : R.tuples()) {
        auto a = swap ? t[1] : t[0], b = swap ? t[0] : t[1];
        member[a * factors[hi].size() + b] = true;
      }
      for (std::size_t x = 0; x < table.size(); ++x) {
        table[x] = table[x] && member[x];
      }
    }
    std::vector<Tuple> out;
    Tuple              cur(k, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == k) {
        out.push_back(cur);
        return;
      }
      for (Element v = 0; v < factors[pos].size(); ++v) {
        bool ok = true;
        for (std::size_t i = 0; i < pos && ok; ++i) {
          auto const& table = allowed[i][pos];
          ok = table.empty() || table[cur[i] * factors[pos].size() + v];
        }
        if (ok) {
          cur[pos] = v;
          rec(pos + 1);
        }
      }
    };
    rec(0);
    return SubPower(factors, std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Majority-selecting relations
  ////////////////////////////////////////////////////////////////////////

  // A violation of
  //   (x,y,z'), (x,y',z), (x',y,z) in R  ==>  (x,y,z) in R.
  struct TernaryWitness {
    Element x, y, z, x2, y2, z2;

    bool operator==(TernaryWitness const&) const = default;
  };

  // None if R is majority-selecting, otherwise the lexicographically least
  // violation (x, y, z, x', y', z').
  inline std::optional<TernaryWitness> check_majority_selecting(SubPower const& R) {
    if (R.arity() != 3) {
      throw PreconditionError("check_majority_selecting: relation must be ternary, got arity "
                              + std::to_string(R.arity()));
    }
    std::size_t const nx = R.factors()[0].size(), ny = R.factors()[1].size(),
                      nz = R.factors()[2].size();
    std::vector<bool> in(nx * ny * nz, false), xy(nx * ny, false), xz(nx * nz, false),
        yz(ny * nz, false);
    for (auto const& t : R.tuples()) {
      in[(t[0] * ny + t[1]) * nz + t[2]] = true;
      xy[t[0] * ny + t[1]]              = true;
      xz[t[0] * nz + t[2]]              = true;
      yz[t[1] * nz + t[2]]              = true;
    }
    auto member = [&](Element a, Element b, Element c) {
      return in[(a * ny + b) * nz + c];
    };
    for (Element x = 0; x < nx; ++x) {
      for (Element y = 0; y < ny; ++y) {
        if (!xy[x * ny + y]) {
          continue;
        }
        for (Element z = 0; z < nz; ++z) {
          if (member(x, y, z) || !xz[x * nz + z] || !yz[y * nz + z]) {
            continue;
          }
          TernaryWitness w{x, y, z, 0, 0, 0};
          while (!member(w.x2, y, z)) {
            ++w.x2;
          }
          while (!member(x, w.y2, z)) {
            ++w.y2;
          }
          while (!member(x, y, w.z2)) {
            ++w.z2;
          }
          return w;
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct decomposability
  ////////////////////////////////////////////////////////////////////////

  struct DecompositionReport {
    bool           holds = false;
    BinaryRelation first;   // image under (X x Y)^2 -> X^2
    BinaryRelation second;  // image under (X x Y)^2 -> Y^2
    // A pair of first x_T second that is missing from R.
    std::optional<BinaryRelation::pair_type> witness;
  };

  // R is a reflexive compatible relation on X x Y (elements encoded as
  // x * |Y| + y). Compares R with the transpose product of its projections.
  inline DecompositionReport direct_decomposability(BinaryRelation const& R,
                                                    FiniteAlgebra const&  X,
                                                    FiniteAlgebra const&  Y) {
    std::size_t const nx = X.size(), ny = Y.size();
    if (R.size() != nx * ny) {
      throw PreconditionError("direct_decomposability: relation size does not match X x Y");
    }
    if (!R.is_reflexive()) {
      throw PreconditionError("direct_decomposability: relation is not reflexive");
    }
    FiniteAlgebra const factors[] = {X, Y};
    auto const          XY        = product(factors);
    if (auto bad = find_incompatibility(XY.algebra, R)) {
      throw PreconditionError("direct_decomposability: relation not compatible with \""
                              + bad->first + "\"");
    }
    DecompositionReport rep{false, BinaryRelation(nx), BinaryRelation(ny), std::nullopt};
    for (auto [a, b] : R.pairs()) {
      rep.first.add(static_cast<Element>(a / ny), static_cast<Element>(b / ny));
      rep.second.add(static_cast<Element>(a % ny), static_cast<Element>(b % ny));
    }
    auto const T = transpose_product(rep.first, rep.second);
    if (!R.is_subset_of(T)) {
      throw Error("direct_decomposability: R is not contained in its transpose product");
    }
    rep.witness = T.first_pair_not_in(R);
    rep.holds   = !rep.witness.has_value();
    return rep;
  }

}  // namespace majlab

#endif  // MAJLAB_SUBPOWER_HPP_
