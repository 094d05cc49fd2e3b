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

// Direct re-verification of counterexample witnesses. Everything here works
// from the raw operation tables of the base algebra with ordered sets and
// digit arithmetic; none of the relation, congruence, subpower or product
// machinery is used, so a searcher bug cannot confirm its own witness.
//
// Each function returns nullopt when the witness is confirmed, otherwise a
// description of what did not hold.

#ifndef MAJLAB_RECHECK_HPP_
#define MAJLAB_RECHECK_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"

namespace majlab::recheck {

  using json    = nlohmann::ordered_json;
  using Pair    = std::pair<std::size_t, std::size_t>;
  using PairSet = std::set<Pair>;
  using Problem = std::optional<std::string>;

  // A^e with elements numbered by their digit strings, leftmost digit most
  // significant.
  class NaivePower {
   public:
    NaivePower(FiniteAlgebra const& A, std::size_t e) : _A(A), _e(e) {
      for (std::size_t i = 0; i < e; ++i) {
        _size *= A.size();
      }
    }

    std::size_t size() const {
      return _size;
    }

    std::size_t operations() const {
      return _A.number_of_operations();
    }

    std::size_t arity(std::size_t op) const {
      return _A.arity(op);
    }

    std::vector<std::size_t> digits(std::size_t x) const {
      std::vector<std::size_t> d(_e);
      for (std::size_t i = _e; i-- > 0;) {
        d[i] = x % _A.size();
        x /= _A.size();
      }
      return d;
    }

    std::size_t apply(std::size_t op, std::vector<std::size_t> const& args) const {
      std::vector<std::vector<std::size_t>> ds;
      for (auto a : args) {
        ds.push_back(digits(a));
      }
      std::size_t out = 0;
      for (std::size_t c = 0; c < _e; ++c) {
        std::size_t index = 0;
        for (auto const& d : ds) {
          index = index * _A.size() + d[c];
        }
        out = out * _A.size() + _A.table(op)[index];
      }
      return out;
    }

   private:
    FiniteAlgebra const& _A;
    std::size_t          _e;
    std::size_t          _size = 1;
  };

  // Calls f(tuple) for every tuple in S^k.
  template <typename T, typename F>
  void for_each_tuple(std::vector<T> const& S, std::size_t k, F&& f) {
    std::vector<std::size_t> pos(k, 0);
    if (k > 0 && S.empty()) {
      return;
    }
    std::vector<T> args(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) {
        args[i] = S[pos[i]];
      }
      f(args);
      std::size_t i = k;
      while (i > 0 && ++pos[i - 1] == S.size()) {
        pos[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return;
      }
    }
  }

  // Closure of a set of tuples over B_0 x ... x B_{m-1} (each a power of the
  // same algebra) under the coordinatewise operations.
  inline bool is_closed(std::vector<NaivePower> const& factors,
                        std::set<std::vector<std::size_t>> const& S) {
    std::vector<std::vector<std::size_t>> list(S.begin(), S.end());
    for (std::size_t op = 0; op < factors[0].operations(); ++op) {
      bool ok = true;
      for_each_tuple(list, factors[0].arity(op), [&](auto const& args) {
        if (!ok) {
          return;
        }
        std::vector<std::size_t> result(factors.size());
        for (std::size_t c = 0; c < factors.size(); ++c) {
          std::vector<std::size_t> col;
          for (auto const& t : args) {
            col.push_back(t[c]);
          }
          result[c] = factors[c].apply(op, col);
        }
        ok = S.count(result) > 0;
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  inline bool is_compatible(NaivePower const& B, PairSet const& R) {
    std::set<std::vector<std::size_t>> S;
    for (auto [a, b] : R) {
      S.insert({a, b});
    }
    return is_closed({B, B}, S);
  }

  inline bool is_reflexive(std::size_t n, PairSet const& R) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!R.count({x, x})) {
        return false;
      }
    }
    return true;
  }

  inline PairSet compose(PairSet const& R, PairSet const& S) {
    PairSet out;
    for (auto [a, b] : R) {
      for (auto [c, d] : S) {
        if (b == c) {
          out.insert({a, d});
        }
      }
    }
    return out;
  }

  inline PairSet meet(PairSet const& R, PairSet const& S) {
    PairSet out;
    for (auto const& p : R) {
      if (S.count(p)) {
        out.insert(p);
      }
    }
    return out;
  }

  inline std::size_t index_at(json const& j, std::size_t i) {
    return j.at(i).get<std::size_t>();
  }

  inline PairSet pairs_of(json const& rel) {
    PairSet out;
    for (auto const& p : rel.at("pairs")) {
      out.insert({index_at(p, 0), index_at(p, 1)});
    }
    return out;
  }

  inline PairSet partition_pairs(json const& blocks) {
    PairSet out;
    for (auto const& b : blocks) {
      for (auto const& x : b) {
        for (auto const& y : b) {
          out.insert({x.get<std::size_t>(), y.get<std::size_t>()});
        }
      }
    }
    return out;
  }

  // `blocks` partitions {0..n-1} into a congruence of B.
  inline Problem congruence_problem(NaivePower const& B, json const& blocks, char const* name) {
    std::vector<int> seen(B.size(), 0);
    for (auto const& b : blocks) {
      for (auto const& x : b) {
        auto v = x.get<std::size_t>();
        if (v >= B.size() || seen[v]++) {
          return std::string(name) + " is not a partition";
        }
      }
    }
    for (auto s : seen) {
      if (s != 1) {
        return std::string(name) + " is not a partition";
      }
    }
    if (!is_compatible(B, partition_pairs(blocks))) {
      return std::string(name) + " is not compatible";
    }
    return std::nullopt;
  }

  inline Problem reflexive_relation_problem(NaivePower const& B, PairSet const& R,
                                            char const* name) {
    if (!is_reflexive(B.size(), R)) {
      return std::string(name) + " is not reflexive";
    }
    if (!is_compatible(B, R)) {
      return std::string(name) + " is not compatible";
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Per-condition checks
  ////////////////////////////////////////////////////////////////////////

  inline Problem pixley_cong(FiniteAlgebra const& A, json const& w) {
    NaivePower const B(A, w.at("power").get<std::size_t>());
    for (char const* name : {"alpha", "beta", "gamma"}) {
      if (auto p = congruence_problem(B, w.at(name).at("blocks"), name)) {
        return p;
      }
    }
    PairSet const al = partition_pairs(w.at("alpha").at("blocks"));
    PairSet const be = partition_pairs(w.at("beta").at("blocks"));
    PairSet const ga = partition_pairs(w.at("gamma").at("blocks"));
    PairSet const lhs  = meet(al, compose(be, ga));
    PairSet const rhs  = compose(meet(al, be), meet(al, ga));
    Pair const    pair = {index_at(w.at("pair"), 0), index_at(w.at("pair"), 1)};
    if (lhs.count(pair) == rhs.count(pair)) {
      return "pair lies on both sides or on neither";
    }
    return std::nullopt;
  }

  // Condition (ii): (A o B) & (A o C) <= A o (B & C).
  // Condition (iii): A & (B o C) <= (A & B) o (A & C).
  inline Problem pixley_reflexive(FiniteAlgebra const& A, json const& w, bool third) {
    NaivePower const B(A, w.at("power").get<std::size_t>());
    PairSet const    r = pairs_of(w.at("A")), s = pairs_of(w.at("B")), t = pairs_of(w.at("C"));
    for (auto [rel, name] : {std::pair{&r, "A"}, std::pair{&s, "B"}, std::pair{&t, "C"}}) {
      if (auto p = reflexive_relation_problem(B, *rel, name)) {
        return p;
      }
    }
    PairSet const lhs = third ? meet(r, compose(s, t)) : meet(compose(r, s), compose(r, t));
    PairSet const rhs = third ? compose(meet(r, s), meet(r, t)) : compose(r, meet(s, t));
    Pair const    pair = {index_at(w.at("pair"), 0), index_at(w.at("pair"), 1)};
    if (!lhs.count(pair) || rhs.count(pair)) {
      return std::string("pair does not separate the two sides");
    }
    return std::nullopt;
  }

  inline std::set<std::vector<std::size_t>> tuple_set(json const& tuples) {
    std::set<std::vector<std::size_t>> out;
    for (auto const& t : tuples) {
      out.insert(t.get<std::vector<std::size_t>>());
    }
    return out;
  }

  inline Problem bergman(FiniteAlgebra const& A, json const& w) {
    std::size_t const       k = w.at("factors").get<std::size_t>();
    std::vector<NaivePower> factors(k, NaivePower(A, 1));
    auto const              S = tuple_set(w.at("subpower").at("tuples"));
    if (S.empty() || !is_closed(factors, S)) {
      return std::string("subpower is empty or not closed");
    }
    auto const t = w.at("missing_tuple").get<std::vector<std::size_t>>();
    if (t.size() != k || S.count(t)) {
      return std::string("missing tuple belongs to the subpower");
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        bool found = false;
        for (auto const& s : S) {
          found = found || (s[i] == t[i] && s[j] == t[j]);
        }
        if (!found) {
          return "missing tuple is not in the (" + std::to_string(i) + "," + std::to_string(j)
                 + ") image";
        }
      }
    }
    return std::nullopt;
  }

  inline Problem majority_selecting(FiniteAlgebra const& A, json const& w) {
    auto const              powers = w.at("powers").get<std::vector<std::size_t>>();
    std::vector<NaivePower> factors;
    for (auto e : powers) {
      factors.emplace_back(A, e);
    }
    auto const R = tuple_set(w.at("relation").at("tuples"));
    if (R.empty() || !is_closed(factors, R)) {
      return std::string("relation is empty or not closed");
    }
    auto const& v = w.at("violation");
    auto        g = [&](char const* key) {
      return v.at(key).get<std::size_t>();
    };
    std::size_t x = g("x"), y = g("y"), z = g("z"), x2 = g("x'"), y2 = g("y'"), z2 = g("z'");
    if (!R.count({x, y, z2}) || !R.count({x, y2, z}) || !R.count({x2, y, z})) {
      return std::string("a premise is missing from the relation");
    }
    if (R.count({x, y, z})) {
      return std::string("the conclusion belongs to the relation");
    }
    return std::nullopt;
  }

  inline Problem pcrt(FiniteAlgebra const& A, json const& w) {
    NaivePower const B(A, w.at("power").get<std::size_t>());
    std::vector<std::set<std::size_t>> blocks;
    for (auto const& row : w.at("system")) {
      if (auto p = congruence_problem(B, row.at("blocks"), "row partition")) {
        return p;
      }
      std::size_t const a = row.at("element").get<std::size_t>();
      std::set<std::size_t> block;
      for (auto const& b : row.at("blocks")) {
        auto members = b.get<std::vector<std::size_t>>();
        if (std::find(members.begin(), members.end(), a) != members.end()) {
          block.insert(members.begin(), members.end());
        }
      }
      blocks.push_back(std::move(block));
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        bool hit = false;
        for (auto x : blocks[i]) {
          hit = hit || blocks[j].count(x) > 0;
        }
        if (!hit) {
          return "rows " + std::to_string(i) + " and " + std::to_string(j) + " are disjoint";
        }
      }
    }
    for (std::size_t x = 0; x < B.size(); ++x) {
      bool all = true;
      for (auto const& b : blocks) {
        all = all && b.count(x) > 0;
      }
      if (all) {
        return "element " + std::to_string(x) + " solves the system";
      }
    }
    return std::nullopt;
  }

  inline Problem image_meet(FiniteAlgebra const& A, json const& w) {
    NaivePower const B(A, w.at("power").get<std::size_t>());
    json const&      theta = w.at("theta").at("blocks");
    if (auto p = congruence_problem(B, theta, "theta")) {
      return p;
    }
    std::vector<std::size_t> label(B.size());
    for (std::size_t b = 0; b < theta.size(); ++b) {
      for (auto const& x : theta[b]) {
        label[x.get<std::size_t>()] = b;
      }
    }
    PairSet const r = pairs_of(w.at("R")), s = pairs_of(w.at("S"));
    for (auto [rel, name] : {std::pair{&r, "R"}, std::pair{&s, "S"}}) {
      if (auto p = reflexive_relation_problem(B, *rel, name)) {
        return p;
      }
    }
    auto image = [&](PairSet const& rel) {
      PairSet out;
      for (auto [a, b] : rel) {
        out.insert({label[a], label[b]});
      }
      return out;
    };
    Pair const pair = {index_at(w.at("pair"), 0), index_at(w.at("pair"), 1)};
    if (!image(r).count(pair) || !image(s).count(pair) || image(meet(r, s)).count(pair)) {
      return std::string("pair does not separate f(R & S) from f(R) & f(S)");
    }
    return std::nullopt;
  }

  inline Problem ddrr(FiniteAlgebra const& A, json const& w) {
    NaivePower const B(A, 2);
    PairSet const     R = pairs_of(w.at("relation"));
    if (auto p = reflexive_relation_problem(B, R, "relation")) {
      return p;
    }
    std::size_t const n = A.size();
    Pair const        p = {index_at(w.at("missing_pair"), 0), index_at(w.at("missing_pair"), 1)};
    if (R.count(p)) {
      return std::string("missing pair belongs to the relation");
    }
    bool first = false, second = false;
    for (auto [a, b] : R) {
      first  = first || (a / n == p.first / n && b / n == p.second / n);
      second = second || (a % n == p.first % n && b % n == p.second % n);
    }
    if (!first || !second) {
      return std::string("missing pair is not in the transpose product of the projections");
    }
    return std::nullopt;
  }

  // m(x,x,y) = m(x,y,x) = m(y,x,x) = x, evaluating the term directly.
  inline Problem majority_term(FiniteAlgebra const& A, TermExpr const& t) {
    for (Element x = 0; x < A.size(); ++x) {
      for (Element y = 0; y < A.size(); ++y) {
        for (auto args : {std::vector<Element>{x, x, y}, std::vector<Element>{x, y, x},
                          std::vector<Element>{y, x, x}}) {
          if (eval_term(A, t, args) != x) {
            return "term " + t.to_string() + " violates a majority identity at ("
                   + std::to_string(args[0]) + "," + std::to_string(args[1]) + ","
                   + std::to_string(args[2]) + ")";
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace majlab::recheck

#endif  // MAJLAB_RECHECK_HPP_
