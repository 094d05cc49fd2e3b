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

// Bounded checkers for the conditions equivalent to having a majority term,
// and the cross-check that runs them all next to the term search.
//
// Verdicts: fail is definitive (the witness is a counterexample). pass
// holds relative to the bounds recorded with it. unknown means a guard or
// budget stopped the search before any counterexample turned up.

#ifndef MAJLAB_CHECKERS_HPP_
#define MAJLAB_CHECKERS_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "clone.hpp"
#include "congruence.hpp"
#include "json_io.hpp"
#include "recheck.hpp"
#include "relation.hpp"
#include "subpower.hpp"

namespace majlab {

  enum class ConditionId {
    maj_select,
    pixley_refl_ii,
    pixley_refl_iii,
    pixley_cong,
    bergman,
    pcrt,
    image_meet,
    ddrr,
  };

  inline constexpr std::array<ConditionId, 8> all_conditions = {
      ConditionId::maj_select, ConditionId::pixley_refl_ii, ConditionId::pixley_refl_iii,
      ConditionId::pixley_cong, ConditionId::bergman,       ConditionId::pcrt,
      ConditionId::image_meet, ConditionId::ddrr};

  inline char const* to_string(ConditionId c) {
    switch (c) {
      case ConditionId::maj_select: return "MAJ-SELECT";
      case ConditionId::pixley_refl_ii: return "PIXLEY-REFL-II";
      case ConditionId::pixley_refl_iii: return "PIXLEY-REFL-III";
      case ConditionId::pixley_cong: return "PIXLEY-CONG";
      case ConditionId::bergman: return "BERGMAN";
      case ConditionId::pcrt: return "PCRT";
      case ConditionId::image_meet: return "IMAGE-MEET";
      case ConditionId::ddrr: return "DDRR";
    }
    return "?";
  }

  // Consequences of a majority term whose failure refutes one but whose
  // success proves nothing.
  inline bool is_implication_only(ConditionId c) {
    return c == ConditionId::image_meet || c == ConditionId::ddrr;
  }

  enum class Verdict { pass, fail, unknown };

  inline char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::pass: return "pass";
      case Verdict::fail: return "fail";
      case Verdict::unknown: return "unknown";
    }
    return "?";
  }

  struct CheckOutcome {
    ConditionId         condition = ConditionId::maj_select;
    Verdict             verdict   = Verdict::unknown;
    json                bounds    = json::object();
    std::optional<json> witness;
  };

  struct CheckConfig {
    std::vector<std::size_t> powers{1, 2};  // PIXLEY-CONG and PCRT
    std::size_t              n_factors = 3;  // BERGMAN
    std::size_t              gen_cap   = 3;  // BERGMAN and MAJ-SELECT
    CloneBudget              clone{};
    std::size_t              cong_size_guard = 12;  // largest algebra whose congruences or
                                                    // reflexive relations are enumerated
    std::size_t sys_len         = 3;     // PCRT
    std::size_t relation_power  = 1;     // PIXLEY-REFL and IMAGE-MEET
    std::size_t relation_budget = 1024;  // most reflexive compatible relations
    std::size_t subpower_guard  = 256;   // largest product for subpower enumeration
    std::vector<std::array<std::size_t, 3>> power_triples{{1, 1, 1}};  // MAJ-SELECT
    std::size_t threads = 0;  // cross_check; 0 = hardware concurrency
  };

  namespace detail {
    inline std::optional<FiniteAlgebra> guarded_power(FiniteAlgebra const& A,
                                                      std::size_t          e,
                                                      std::size_t          guard) {
      if (e == 0 || !checked_pow(A.size(), e, guard)) {
        return std::nullopt;
      }
      return power(A, e).algebra;
    }

    inline json pair_json(BinaryRelation::pair_type p) {
      return json::array({p.first, p.second});
    }

    inline CheckOutcome outcome(ConditionId c, Verdict v, json bounds,
                                std::optional<json> witness = std::nullopt) {
      return CheckOutcome{c, v, std::move(bounds), std::move(witness)};
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Pixley identity on congruences
  ////////////////////////////////////////////////////////////////////////

  // alpha & (beta o gamma) = (alpha & beta) o (alpha & gamma) for every
  // triple of congruences of A^e, e in cfg.powers. Powers above the size
  // guard are skipped and listed in the bounds.
  inline CheckOutcome check_pixley_congruences(FiniteAlgebra const& A, CheckConfig const& cfg) {
    json checked = json::array(), skipped = json::array();
    auto bounds  = [&](bool exhaustive) {
      return json{{"powers", cfg.powers},     {"size_guard", cfg.cong_size_guard},
                  {"checked", checked},       {"skipped_powers", skipped},
                  {"exhaustive", exhaustive}};
    };
    for (auto e : cfg.powers) {
      auto B = detail::guarded_power(A, e, cfg.cong_size_guard);
      if (!B) {
        skipped.push_back(e);
        continue;
      }
      auto const             cons = all_congruences(*B, cfg.cong_size_guard);
      std::size_t const      N    = cons.size();
      std::vector<BinaryRelation> rel;
      for (auto const& c : cons) {
        rel.push_back(c.relation());
      }
      std::vector<BinaryRelation> meets, comps;
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
          meets.push_back(meet(rel[i], rel[j]));
          comps.push_back(compose(rel[i], rel[j]));
        }
      }
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          for (std::size_t c = 0; c < N; ++c) {
            auto const lhs = meet(rel[a], comps[b * N + c]);
            auto const rhs = compose(meets[a * N + b], meets[a * N + c]);
            if (lhs == rhs) {
              continue;
            }
            auto        p    = lhs.first_pair_not_in(rhs);
            char const* side = "left";
            if (!p) {
              p    = rhs.first_pair_not_in(lhs);
              side = "right";
            }
            json w = {{"power", e},
                      {"algebra", B->name()},
                      {"alpha", to_json(cons[a])},
                      {"beta", to_json(cons[b])},
                      {"gamma", to_json(cons[c])},
                      {"pair", detail::pair_json(*p)},
                      {"side", side}};
            return detail::outcome(ConditionId::pixley_cong, Verdict::fail, bounds(false),
                                   std::move(w));
          }
        }
      }
      checked.push_back({{"power", e}, {"congruences", N}, {"triples", N * N * N}});
    }
    return detail::outcome(ConditionId::pixley_cong,
                           checked.empty() ? Verdict::unknown : Verdict::pass,
                           bounds(!checked.empty() && skipped.empty()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Reflexive-relation forms
  ////////////////////////////////////////////////////////////////////////

  // (ii)  (A o B) & (A o C) <= A o (B & C)
  // (iii) A & (B o C) <= (A & B) o (A & C)
  // over all triples of reflexive compatible relations on A^relation_power.
  inline std::pair<CheckOutcome, CheckOutcome> check_pixley_reflexive(FiniteAlgebra const& A,
                                                                      CheckConfig const& cfg) {
    std::size_t const e = cfg.relation_power;
    json bounds         = {{"power", e},
                           {"size_guard", cfg.cong_size_guard},
                           {"relation_budget", cfg.relation_budget}};
    auto B = detail::guarded_power(A, e, cfg.cong_size_guard);
    if (!B) {
      bounds["skipped_powers"] = {e};
      bounds["exhaustive"]     = false;
      return {detail::outcome(ConditionId::pixley_refl_ii, Verdict::unknown, bounds),
              detail::outcome(ConditionId::pixley_refl_iii, Verdict::unknown, bounds)};
    }
    auto const        fam = reflexive_compatible_relations(*B, cfg.relation_budget);
    auto const&       R   = fam.relations;
    std::size_t const N   = R.size();
    bounds["relations"]   = N;
    bounds["exhaustive"]  = fam.complete;

    std::vector<BinaryRelation> meets, comps;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        meets.push_back(meet(R[i], R[j]));
        comps.push_back(compose(R[i], R[j]));
      }
    }
    auto run = [&](ConditionId id, auto&& sides) {
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          for (std::size_t c = 0; c < N; ++c) {
            auto [lhs, rhs] = sides(a, b, c);
            if (auto p = lhs.first_pair_not_in(rhs)) {
              json w = {{"power", e},
                        {"algebra", B->name()},
                        {"A", to_json(R[a])},
                        {"B", to_json(R[b])},
                        {"C", to_json(R[c])},
                        {"pair", detail::pair_json(*p)}};
              return detail::outcome(id, Verdict::fail, bounds, std::move(w));
            }
          }
        }
      }
      return detail::outcome(id, fam.complete ? Verdict::pass : Verdict::unknown, bounds);
    };
    auto ii = run(ConditionId::pixley_refl_ii, [&](std::size_t a, std::size_t b, std::size_t c) {
      return std::make_pair(meet(comps[a * N + b], comps[a * N + c]),
                            compose(R[a], meets[b * N + c]));
    });
    auto iii = run(ConditionId::pixley_refl_iii, [&](std::size_t a, std::size_t b, std::size_t c) {
      return std::make_pair(meet(R[a], comps[b * N + c]),
                            compose(meets[a * N + b], meets[a * N + c]));
    });
    return {std::move(ii), std::move(iii)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Pairwise reconstruction of subpowers
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Pullback of the pairwise images of a set of tuples over n-element
    // factors. count() stops as soon as it exceeds `limit`.
    class PairwiseTables {
     public:
      PairwiseTables(std::size_t n, std::size_t k, std::vector<Tuple> const& tuples)
          : _n(n), _k(k), _allowed(k * k * n * n, false) {
        for (auto const& t : tuples) {
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
              _allowed[slot(i, j, t[i], t[j])] = true;
            }
          }
        }
      }

      std::size_t count(std::size_t limit) const {
        std::size_t total = 0;
        Tuple       cur(_k);
        walk(cur, 0, [&](Tuple const&) { return ++total <= limit; });
        return total;
      }

      // Least tuple of the pullback rejected by `member`.
      std::optional<Tuple> first_not(std::function<bool(Tuple const&)> const& member) const {
        std::optional<Tuple> out;
        Tuple                cur(_k);
        walk(cur, 0, [&](Tuple const& t) {
          if (!member(t)) {
            out = t;
            return false;
          }
          return true;
        });
        return out;
      }

     private:
      std::size_t slot(std::size_t i, std::size_t j, Element a, Element b) const {
        return ((i * _k + j) * _n + a) * _n + b;
      }

      template <typename F>
      bool walk(Tuple& cur, std::size_t pos, F&& f) const {
        if (pos == _k) {
          return f(cur);
        }
        for (Element v = 0; v < _n; ++v) {
          bool ok = true;
          for (std::size_t i = 0; i < pos && ok; ++i) {
            ok = _allowed[slot(i, pos, cur[i], v)];
          }
          if (ok) {
            cur[pos] = v;
            if (!walk(cur, pos + 1, f)) {
              return false;
            }
          }
        }
        return true;
      }

      std::size_t       _n, _k;
      std::vector<bool> _allowed;
    };
  }  // namespace detail

  // Every subpower of A^n_factors generated by at most gen_cap elements
  // equals the pullback of its pairwise images.
  inline CheckOutcome check_bergman(FiniteAlgebra const& A, CheckConfig const& cfg) {
    std::size_t const k      = cfg.n_factors;
    json              bounds = {{"factors", k},
                                {"gen_cap", cfg.gen_cap},
                                {"subpower_guard", cfg.subpower_guard}};
    if (k == 0 || !detail::checked_pow(A.size(), k, cfg.subpower_guard)) {
      bounds["skipped"]    = true;
      bounds["exhaustive"] = false;
      return detail::outcome(ConditionId::bergman, Verdict::unknown, bounds);
    }
    SubpowerEngine     engine(Factors(k, A));
    EnumerationOptions opts;
    opts.max_extra_generators = cfg.gen_cap;
    std::optional<json> witness;
    auto stats = enumerate_subuniverses(engine, {}, opts, [&](auto const& keys) {
      std::vector<Tuple> tuples;
      tuples.reserve(keys.size());
      for (auto key : keys) {
        tuples.push_back(engine.decode(key));
      }
      detail::PairwiseTables tables(A.size(), k, tuples);
      if (tables.count(tuples.size()) == tuples.size()) {
        return true;
      }
      SubPower S(engine.shared_factors(), tuples);
      auto     missing = tables.first_not([&](Tuple const& t) { return S.contains(t); });
      auto     full    = pullback_reconstruct(S.factors(), pairwise_images(S));
      witness          = json{{"factors", k},
                              {"subpower", to_json(S)},
                              {"subpower_size", S.size()},
                              {"reconstruction_size", full.size()},
                              {"missing_tuple", *missing}};
      return false;
    });
    bounds["subpowers_checked"]    = stats.count;
    bounds["enumeration_complete"] = stats.complete;
    bounds["exhaustive"]           = stats.complete && !witness;
    if (witness) {
      return detail::outcome(ConditionId::bergman, Verdict::fail, bounds, std::move(witness));
    }
    return detail::outcome(ConditionId::bergman, Verdict::pass, bounds);
  }

  ////////////////////////////////////////////////////////////////////////
  // Majority-selecting ternary relations
  ////////////////////////////////////////////////////////////////////////

  // Every subuniverse of A^e1 x A^e2 x A^e3, for each configured (e1,e2,e3),
  // generated by at most gen_cap elements is majority-selecting.
  inline CheckOutcome check_majority_selecting_all(FiniteAlgebra const& A, CheckConfig const& cfg) {
    json checked = json::array(), skipped = json::array();
    auto bounds  = [&](bool exhaustive) {
      return json{{"power_triples", cfg.power_triples},
                  {"gen_cap", cfg.gen_cap},
                  {"subpower_guard", cfg.subpower_guard},
                  {"checked", checked},
                  {"skipped", skipped},
                  {"exhaustive", exhaustive}};
    };
    bool all_complete = true;
    for (auto const& triple : cfg.power_triples) {
      Factors factors;
      bool    fits = true;
      std::size_t total = 1;
      for (auto e : triple) {
        auto B = detail::guarded_power(A, e, cfg.subpower_guard);
        if (!B || total > cfg.subpower_guard / B->size()) {
          fits = false;
          break;
        }
        total *= B->size();
        factors.push_back(std::move(*B));
      }
      if (!fits) {
        skipped.push_back(triple);
        continue;
      }
      SubpowerEngine     engine(std::move(factors));
      EnumerationOptions opts;
      opts.max_extra_generators = cfg.gen_cap;
      std::optional<json> witness;
      auto stats = enumerate_subuniverses(engine, {}, opts, [&](auto const& keys) {
        auto R = engine.to_subpower(keys);
        if (auto v = check_majority_selecting(R)) {
          witness = json{{"powers", triple}, {"relation", to_json(R)}, {"violation", to_json(*v)}};
          return false;
        }
        return true;
      });
      all_complete = all_complete && stats.complete;
      checked.push_back({{"powers", triple},
                         {"relations_checked", stats.count},
                         {"enumeration_complete", stats.complete}});
      if (witness) {
        return detail::outcome(ConditionId::maj_select, Verdict::fail, bounds(false),
                               std::move(witness));
      }
    }
    return detail::outcome(ConditionId::maj_select,
                           checked.empty() ? Verdict::unknown : Verdict::pass,
                           bounds(!checked.empty() && skipped.empty() && all_complete));
  }

  ////////////////////////////////////////////////////////////////////////
  // Pairwise Chinese remainder property
  ////////////////////////////////////////////////////////////////////////

  // Every pairwise solvable system of length <= sys_len over congruences of
  // A^e, e in cfg.powers, is solvable. Systems are enumerated by length,
  // then congruence tuple, then block tuple (blocks by least element); each
  // row's element is the least element of its block.
  inline CheckOutcome check_pcrt(FiniteAlgebra const& A, CheckConfig const& cfg) {
    json checked = json::array(), skipped = json::array();
    auto bounds  = [&](bool exhaustive) {
      return json{{"powers", cfg.powers},
                  {"max_length", cfg.sys_len},
                  {"size_guard", cfg.cong_size_guard},
                  {"checked", checked},
                  {"skipped_powers", skipped},
                  {"exhaustive", exhaustive}};
    };
    using Bits = std::vector<std::uint64_t>;
    for (auto e : cfg.powers) {
      auto B = detail::guarded_power(A, e, cfg.cong_size_guard);
      if (!B) {
        skipped.push_back(e);
        continue;
      }
      auto const        cons  = all_congruences(*B, cfg.cong_size_guard);
      std::size_t const n     = B->size();
      std::size_t const words = (n + 63) / 64;
      // blocks[c][b]: members of block b of congruence c.
      std::vector<std::vector<Bits>>    blocks;
      std::vector<std::vector<Element>> reps;
      for (auto const& c : cons) {
        std::vector<Bits> bs(c.block_count(), Bits(words, 0));
        for (Element x = 0; x < n; ++x) {
          bs[c.block_of(x)][x / 64] |= std::uint64_t(1) << (x % 64);
        }
        blocks.push_back(std::move(bs));
        reps.push_back(c.representatives());
      }
      auto meets = [&](Bits const& a, Bits const& b) {
        for (std::size_t w = 0; w < words; ++w) {
          if (a[w] & b[w]) {
            return true;
          }
        }
        return false;
      };
      std::size_t systems = 0;
      for (std::size_t L = 1; L <= cfg.sys_len; ++L) {
        std::vector<std::size_t> ci(L, 0), bi(L, 0);
        std::vector<Bits>        running(L + 1, Bits(words, ~std::uint64_t(0)));
        std::optional<json>      witness;
        // Depth-first over block choices for the congruence tuple ci.
        std::function<bool(std::size_t)> rec = [&](std::size_t d) {
          if (d == L) {
            ++systems;
            for (auto w : running[L]) {
              if (w) {
                return true;
              }
            }
            json rows = json::array();
            for (std::size_t r = 0; r < L; ++r) {
              rows.push_back({{"blocks", cons[ci[r]].blocks()},
                              {"element", reps[ci[r]][bi[r]]}});
            }
            witness = json{{"power", e}, {"algebra", B->name()}, {"system", rows}};
            return false;
          }
          auto const& bs = blocks[ci[d]];
          for (std::size_t b = 0; b < bs.size(); ++b) {
            bool ok = true;
            for (std::size_t r = 0; r < d && ok; ++r) {
              ok = meets(blocks[ci[r]][bi[r]], bs[b]);
            }
            if (!ok) {
              continue;
            }
            bi[d] = b;
            for (std::size_t w = 0; w < words; ++w) {
              running[d + 1][w] = running[d][w] & bs[b][w];
            }
            if (!rec(d + 1)) {
              return false;
            }
          }
          return true;
        };
        while (true) {
          if (!rec(0)) {
            return detail::outcome(ConditionId::pcrt, Verdict::fail, bounds(false),
                                   std::move(witness));
          }
          std::size_t i = L;
          while (i > 0 && ++ci[i - 1] == cons.size()) {
            ci[i - 1] = 0;
            --i;
          }
          if (i == 0) {
            break;
          }
        }
      }
      checked.push_back(
          {{"power", e}, {"congruences", cons.size()}, {"pairwise_solvable_systems", systems}});
    }
    return detail::outcome(ConditionId::pcrt, checked.empty() ? Verdict::unknown : Verdict::pass,
                           bounds(!checked.empty() && skipped.empty()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Images of meets
  ////////////////////////////////////////////////////////////////////////

  // f(R & S) = f(R) & f(S) for every quotient map f of B = A^relation_power
  // and reflexive compatible relations R, S on B.
  inline CheckOutcome check_image_meet_preservation(FiniteAlgebra const& A,
                                                    CheckConfig const&   cfg) {
    std::size_t const e      = cfg.relation_power;
    json              bounds = {{"power", e},
                                {"size_guard", cfg.cong_size_guard},
                                {"relation_budget", cfg.relation_budget}};
    auto B = detail::guarded_power(A, e, cfg.cong_size_guard);
    if (!B) {
      bounds["skipped_powers"] = {e};
      bounds["exhaustive"]     = false;
      return detail::outcome(ConditionId::image_meet, Verdict::unknown, bounds);
    }
    auto const  cons = all_congruences(*B, cfg.cong_size_guard);
    auto const  fam  = reflexive_compatible_relations(*B, cfg.relation_budget);
    auto const& R    = fam.relations;
    bounds["congruences"] = cons.size();
    bounds["relations"]   = R.size();
    bounds["exhaustive"]  = fam.complete;
    for (auto const& theta : cons) {
      auto image = [&](BinaryRelation const& rel) {
        BinaryRelation out(theta.block_count());
        for (auto [a, b] : rel.pairs()) {
          out.add(static_cast<Element>(theta.block_of(a)), static_cast<Element>(theta.block_of(b)));
        }
        return out;
      };
      std::vector<BinaryRelation> images;
      for (auto const& r : R) {
        images.push_back(image(r));
      }
      for (std::size_t i = 0; i < R.size(); ++i) {
        for (std::size_t j = i; j < R.size(); ++j) {
          auto const lhs = image(meet(R[i], R[j]));
          auto const rhs = meet(images[i], images[j]);
          if (auto p = rhs.first_pair_not_in(lhs)) {
            json w = {{"power", e},
                      {"algebra", B->name()},
                      {"theta", to_json(theta)},
                      {"R", to_json(R[i])},
                      {"S", to_json(R[j])},
                      {"pair", detail::pair_json(*p)}};
            bounds["exhaustive"] = false;
            return detail::outcome(ConditionId::image_meet, Verdict::fail, bounds, std::move(w));
          }
        }
      }
    }
    return detail::outcome(ConditionId::image_meet,
                           fam.complete ? Verdict::pass : Verdict::unknown, bounds);
  }

  ////////////////////////////////////////////////////////////////////////
  // Directly decomposable reflexive relations
  ////////////////////////////////////////////////////////////////////////

  // Every reflexive compatible relation on A x A is the transpose product of
  // its two projections.
  inline CheckOutcome check_ddrr(FiniteAlgebra const& A, CheckConfig const& cfg) {
    json bounds = {{"product", A.name() + "x" + A.name()},
                   {"size_guard", cfg.cong_size_guard},
                   {"relation_budget", cfg.relation_budget}};
    if (!detail::checked_pow(A.size(), 2, cfg.cong_size_guard)) {
      bounds["skipped"]    = true;
      bounds["exhaustive"] = false;
      return detail::outcome(ConditionId::ddrr, Verdict::unknown, bounds);
    }
    FiniteAlgebra const factors[] = {A, A};
    auto const          XY        = product(factors);
    auto const          fam       = reflexive_compatible_relations(XY.algebra, cfg.relation_budget);
    bounds["relations"]           = fam.relations.size();
    bounds["exhaustive"]          = fam.complete;
    for (auto const& R : fam.relations) {
      auto rep = direct_decomposability(R, A, A);
      if (!rep.holds) {
        json w = {{"relation", to_json(R)},
                  {"first", to_json(rep.first)},
                  {"second", to_json(rep.second)},
                  {"missing_pair", detail::pair_json(*rep.witness)},
                  {"relation_size", R.pair_count()},
                  {"transpose_product_size", rep.first.pair_count() * rep.second.pair_count()}};
        bounds["exhaustive"] = false;
        return detail::outcome(ConditionId::ddrr, Verdict::fail, bounds, std::move(w));
      }
    }
    return detail::outcome(ConditionId::ddrr, fam.complete ? Verdict::pass : Verdict::unknown,
                           bounds);
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness re-verification and reports
  ////////////////////////////////////////////////////////////////////////

  // nullopt when the outcome carries no witness or the witness is confirmed.
  inline recheck::Problem verify_witness(FiniteAlgebra const& A, CheckOutcome const& o) {
    if (o.verdict == Verdict::fail && !o.witness) {
      return std::string("fail verdict without a witness");
    }
    if (!o.witness) {
      return std::nullopt;
    }
    try {
      json const& w = *o.witness;
      switch (o.condition) {
        case ConditionId::maj_select: return recheck::majority_selecting(A, w);
        case ConditionId::pixley_refl_ii: return recheck::pixley_reflexive(A, w, false);
        case ConditionId::pixley_refl_iii: return recheck::pixley_reflexive(A, w, true);
        case ConditionId::pixley_cong: return recheck::pixley_cong(A, w);
        case ConditionId::bergman: return recheck::bergman(A, w);
        case ConditionId::pcrt: return recheck::pcrt(A, w);
        case ConditionId::image_meet: return recheck::image_meet(A, w);
        case ConditionId::ddrr: return recheck::ddrr(A, w);
      }
    } catch (std::exception const& e) {
      return std::string("malformed witness: ") + e.what();
    }
    return std::nullopt;
  }

  inline json to_json(CheckOutcome const& o) {
    return {{"id", to_string(o.condition)},
            {"verdict", to_string(o.verdict)},
            {"bounds", o.bounds},
            {"witness", o.witness ? *o.witness : json(nullptr)}};
  }

  struct CrossCheckMatrix {
    std::string               algebra;
    CloneSearchReport         majority;
    std::vector<CheckOutcome> outcomes;  // in all_conditions order
    bool                      fatal = false;
    std::vector<std::string>  notes;

    CheckOutcome const& outcome(ConditionId c) const {
      for (auto const& o : outcomes) {
        if (o.condition == c) {
          return o;
        }
      }
      throw PreconditionError(std::string("no outcome for ") + to_string(c));
    }
  };

  namespace detail {
    inline void run_parallel(std::vector<std::function<void()>> const& tasks, std::size_t threads) {
      if (threads == 0) {
        threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
      }
      threads = std::min(threads, tasks.size());
      std::atomic<std::size_t> next{0};
      std::vector<std::exception_ptr> errors(tasks.size());
      auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
          try {
            tasks[i]();
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      };
      {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) {
          pool.emplace_back(worker);
        }
        worker();
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
    }
  }  // namespace detail

  // Witness-level consistency shared by single checks and the cross check:
  // every fail witness must survive independent re-verification.
  inline void verify_outcomes(FiniteAlgebra const&             A,
                              std::vector<CheckOutcome> const& outcomes,
                              bool&                            fatal,
                              std::vector<std::string>&        notes) {
    for (auto const& o : outcomes) {
      if (auto problem = verify_witness(A, o)) {
        fatal = true;
        notes.push_back(std::string("FATAL: ") + to_string(o.condition)
                        + " witness failed re-verification: " + *problem);
      }
    }
  }

  // Runs the term search and every checker, then applies the coherence
  // rules: with a majority term no condition may fail, and every witness
  // must re-verify. Violations set `fatal`.
  inline CrossCheckMatrix cross_check(FiniteAlgebra const& A, CheckConfig const& cfg) {
    CrossCheckMatrix m;
    m.algebra = A.name();
    std::optional<CheckOutcome>                        maj, cong, berg, crt, img, dd;
    std::optional<std::pair<CheckOutcome, CheckOutcome>> refl;
    std::vector<std::function<void()>>                 tasks = {
        [&] { m.majority = find_majority_term(A, cfg.clone); },
        [&] { maj = check_majority_selecting_all(A, cfg); },
        [&] { refl = check_pixley_reflexive(A, cfg); },
        [&] { cong = check_pixley_congruences(A, cfg); },
        [&] { berg = check_bergman(A, cfg); },
        [&] { crt = check_pcrt(A, cfg); },
        [&] { img = check_image_meet_preservation(A, cfg); },
        [&] { dd = check_ddrr(A, cfg); },
    };
    detail::run_parallel(tasks, cfg.threads);
    m.outcomes = {*maj, refl->first, refl->second, *cong, *berg, *crt, *img, *dd};

    verify_outcomes(A, m.outcomes, m.fatal, m.notes);
    if (m.majority.found) {
      if (auto problem = recheck::majority_term(A, m.majority.found->witness())) {
        m.fatal = true;
        m.notes.push_back("FATAL: " + *problem);
      }
      for (auto const& o : m.outcomes) {
        if (o.verdict == Verdict::fail) {
          m.fatal = true;
          m.notes.push_back(std::string("FATAL: ") + to_string(o.condition)
                            + " fails although a majority term exists");
        }
      }
      if (!m.fatal) {
        m.notes.push_back("majority term found; no condition fails");
      }
    } else {
      std::vector<std::string> failing;
      for (auto const& o : m.outcomes) {
        if (o.verdict == Verdict::fail) {
          failing.push_back(to_string(o.condition));
        }
      }
      if (m.majority.exhausted) {
        m.notes.push_back("no majority term: the ternary clone was generated in full ("
                          + std::to_string(m.majority.generated_count) + " operations)");
      } else {
        m.notes.push_back("majority term search stopped by the clone budget after "
                          + std::to_string(m.majority.generated_count) + " operations");
      }
      if (failing.empty()) {
        m.notes.push_back("no counterexample within the configured bounds");
      } else {
        std::string list;
        for (auto const& f : failing) {
          list += (list.empty() ? "" : ", ") + f;
        }
        m.notes.push_back("refuted by " + list);
      }
    }
    m.notes.push_back(
        "PIXLEY-CONG covers congruences; for algebras equivalence relations and effective "
        "equivalence relations coincide");
    return m;
  }

  inline json to_json(CrossCheckMatrix const& m) {
    json conditions = json::array();
    for (auto const& o : m.outcomes) {
      conditions.push_back(to_json(o));
    }
    json maj = to_json(m.majority);
    return {{"algebra", m.algebra},
            {"majority", maj},
            {"conditions", conditions},
            {"consistency", {{"fatal", m.fatal}, {"notes", m.notes}}}};
  }

}  // namespace majlab

#endif  // MAJLAB_CHECKERS_HPP_
