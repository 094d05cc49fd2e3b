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

#include <functional>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace majlab;
using namespace majlab::testing;

namespace {

  // Restricted growth strings enumerate each set partition once.
  void for_each_partition(std::size_t n, std::function<void(std::vector<std::size_t> const&)> f) {
    std::vector<std::size_t> rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
      if (i == n) {
        f(rgs);
        return;
      }
      for (std::size_t b = 0; b <= used && b < n; ++b) {
        rgs[i] = b;
        rec(i + 1, b == used ? used + 1 : used);
      }
    };
    if (n == 0) {
      f(rgs);
    } else {
      rgs[0] = 0;
      rec(1, 1);
    }
  }

  // Compatibility straight from the definition: related argument tuples
  // give related results.
  bool naive_is_congruence(FiniteAlgebra const& A, std::vector<std::size_t> const& lab) {
    std::size_t const n = A.size();
    for (std::size_t op = 0; op < A.number_of_operations(); ++op) {
      std::size_t const k     = A.arity(op);
      std::size_t       total = 1;
      for (std::size_t i = 0; i < 2 * k; ++i) {
        total *= n;
      }
      Tuple l(k), r(k);
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        bool        ok   = true;
        for (std::size_t i = 0; i < k; ++i) {
          l[i] = static_cast<Element>(rest % n);
          rest /= n;
          r[i] = static_cast<Element>(rest % n);
          rest /= n;
          ok = ok && lab[l[i]] == lab[r[i]];
        }
        if (ok && lab[A.apply(op, l)] != lab[A.apply(op, r)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::set<std::set<std::pair<Element, Element>>> naive_congruences(FiniteAlgebra const& A) {
    std::set<std::set<std::pair<Element, Element>>> out;
    for_each_partition(A.size(), [&](auto const& lab) {
      if (naive_is_congruence(A, lab)) {
        std::set<std::pair<Element, Element>> pairs;
        for (Element a = 0; a < A.size(); ++a) {
          for (Element b = 0; b < A.size(); ++b) {
            if (lab[a] == lab[b]) {
              pairs.emplace(a, b);
            }
          }
        }
        out.insert(pairs);
      }
    });
    return out;
  }

  std::set<std::pair<Element, Element>> as_set(BinaryRelation const& R) {
    auto p = R.pairs();
    return {p.begin(), p.end()};
  }

}  // namespace

TEST_CASE("partition construction", "[congruence]") {
  auto const a = k_alpha();
  CHECK(a.block_count() == 2);
  CHECK(a.related(0, 1));
  CHECK_FALSE(a.related(0, 2));
  CHECK(a.blocks() == std::vector<std::vector<Element>>{{0, 1}, {2, 3}});
  CHECK(a.representatives() == std::vector<Element>{0, 2});
  CHECK(a.block_containing(3) == std::vector<Element>{2, 3});
  CHECK(a.pair_count() == 8);
  CHECK(Congruence::from_relation(a.relation()) == a);
  CHECK(Congruence::from_labels(std::vector<std::size_t>{7, 7, 3, 3}) == a);
  CHECK_THROWS_AS(Congruence::from_blocks(4, {{0, 1}, {1, 2, 3}}), ParseError);
  CHECK_THROWS_AS(Congruence::from_blocks(4, {{0, 1}, {2}}), ParseError);
  CHECK_THROWS_AS(Congruence::from_blocks(4, {{0, 1}, {2, 4}}), ParseError);
  CHECK_THROWS_AS(Congruence::from_relation(BinaryRelation(2, {{0, 1}})), PreconditionError);
}

TEST_CASE("principal congruence examples", "[congruence]") {
  auto const K = klein();
  CHECK(principal_congruence(K, 0, 1) == k_alpha());
  CHECK(principal_congruence(K, 0, 2) == k_beta());
  CHECK(principal_congruence(K, 0, 3) == k_gamma());
  CHECK(principal_congruence(K, 2, 2) == k_delta());

  // In L2^2 collapsing (0,0) with (0,1) forces the kernel of the first
  // projection: {00,01 | 10,11}.
  auto const P = l2_squared();
  CHECK(principal_congruence(P, 0, 1) == Congruence::from_blocks(4, {{0, 1}, {2, 3}}));
  CHECK(principal_congruence(P, 0, 3) == Congruence::codiscrete(4));

  auto const L3 = corpus::lattice3();
  CHECK(principal_congruence(L3, 0, 1) == Congruence::from_blocks(3, {{0, 1}, {2}}));
  CHECK(principal_congruence(L3, 0, 2) == Congruence::codiscrete(3));
  CHECK(principal_congruence(corpus::z3(), 0, 1) == Congruence::codiscrete(3));
  CHECK_THROWS_AS(principal_congruence(L3, 0, 3), PreconditionError);
}

TEST_CASE("principal congruence is the least one containing the pair", "[congruence]") {
  for (auto const& A : corpus::all()) {
    if (A.size() > 6) {
      continue;
    }
    auto const all = naive_congruences(A);
    for (Element a = 0; a < A.size(); ++a) {
      for (Element b = 0; b < A.size(); ++b) {
        auto const theta = principal_congruence(A, a, b);
        REQUIRE(all.contains(as_set(theta.relation())));
        for (auto const& psi : all) {
          if (psi.contains({a, b})) {
            auto const t = as_set(theta.relation());
            REQUIRE(std::includes(psi.begin(), psi.end(), t.begin(), t.end()));
          }
        }
      }
    }
  }
}

TEST_CASE("all_congruences counts", "[congruence]") {
  CHECK(all_congruences(corpus::lattice2()).size() == 2);
  auto const kc = all_congruences(klein());
  REQUIRE(kc.size() == 5);
  CHECK(kc == std::vector<Congruence>{k_delta(), k_alpha(), k_beta(), k_gamma(), k_nabla()});
  CHECK(all_congruences(l2_squared()).size() == 4);
  CHECK(all_congruences(corpus::lattice3()).size() == 4);
  CHECK(all_congruences(corpus::s3()).size() == 3);
  CHECK(all_congruences(corpus::latticeM3()).size() == 2);
  CHECK(all_congruences(corpus::one()).size() == 1);
  CHECK_THROWS_AS(all_congruences(power(corpus::z2(), 4).algebra), GuardExceeded);
  CHECK(all_congruences(power(corpus::z2(), 4).algebra, 16).size() == 67);
}

TEST_CASE("all_congruences agrees with brute force over partitions", "[congruence]") {
  std::vector<FiniteAlgebra> algebras = corpus::all();
  algebras.push_back(klein());
  algebras.push_back(l2_squared());
  algebras.push_back(power(corpus::lattice3(), 2).algebra);
  for (auto const& A : algebras) {
    if (A.size() > 9) {
      continue;
    }
    INFO(A.name());
    auto const                                       lattice = all_congruences(A);
    std::set<std::set<std::pair<Element, Element>>> ours;
    for (auto const& c : lattice) {
      REQUIRE(is_congruence(A, c));
      ours.insert(as_set(c.relation()));
    }
    CHECK(ours.size() == lattice.size());
    CHECK(ours == naive_congruences(A));
    CHECK(lattice.front().is_discrete());
    CHECK(lattice.back().block_count() == 1);
    CHECK(std::is_sorted(lattice.begin(), lattice.end()));
  }
}

TEST_CASE("congruence lattice laws", "[congruence]") {
  for (auto const& A : {klein(), l2_squared(), corpus::lattice3(), corpus::s3(),
                        power(corpus::z3(), 2).algebra}) {
    auto const L = all_congruences(A);
    for (auto const& x : L) {
      for (auto const& y : L) {
        auto const m = congruence_meet(x, y), j = congruence_join(x, y);
        REQUIRE(m == congruence_meet(y, x));
        REQUIRE(j == congruence_join(y, x));
        REQUIRE(congruence_join(x, m) == x);
        REQUIRE(congruence_meet(x, j) == x);
        REQUIRE(is_congruence(A, m));
        REQUIRE(is_congruence(A, j));
        REQUIRE(m.relation() == meet(x.relation(), y.relation()));
        REQUIRE(j.relation() == union_transitive_closure(x.relation(), y.relation()));
        REQUIRE(x.leq(j));
        REQUIRE(m.leq(y));
        REQUIRE(x.leq(y) == x.relation().is_subset_of(y.relation()));
      }
    }
  }
}

TEST_CASE("non-permuting congruences of L2^2", "[congruence]") {
  auto const P  = l2_squared();
  auto const L  = all_congruences(P);
  auto const a  = Congruence::from_blocks(4, {{0, 1}, {2, 3}});
  auto const b  = Congruence::from_blocks(4, {{0, 2}, {1, 3}});
  REQUIRE(std::find(L.begin(), L.end(), a) != L.end());
  REQUIRE(std::find(L.begin(), L.end(), b) != L.end());
  // Kernels of the two projections permute.
  CHECK(congruence_compose(a, b) == congruence_compose(b, a));
  CHECK(congruence_compose(a, b) == BinaryRelation::full(4));
}

TEST_CASE("incompatible partitions", "[congruence]") {
  auto const L3  = corpus::lattice3();
  auto const bad = Congruence::from_blocks(3, {{0, 2}, {1}});
  auto const v   = find_incompatibility(L3, bad);
  REQUIRE(v.has_value());
  CHECK(v->left.size() == 2);
  CHECK_FALSE(is_congruence(L3, bad));
  CHECK_THROWS_AS(quotient(L3, bad), PreconditionError);
}

TEST_CASE("kernels and quotients", "[congruence]") {
  auto const K = klein();
  auto const q = quotient(K, k_alpha());
  CHECK(q.algebra.size() == 2);
  CHECK(q.map.map() == std::vector<Element>{0, 0, 1, 1});
  CHECK(kernel(q.map) == k_alpha());
  auto const P  = power(corpus::lattice2(), 2);
  auto const p0 = projection(P, 0, corpus::lattice2());
  CHECK(kernel(p0) == Congruence::from_blocks(4, {{0, 1}, {2, 3}}));
  for (auto const& theta : all_congruences(corpus::s3())) {
    auto const qs = quotient(corpus::s3(), theta);
    CHECK(kernel(qs.map) == theta);
    CHECK(qs.algebra.size() == theta.block_count());
  }
}

TEST_CASE("inverse-image identity", "[congruence][property]") {
  // Oracle: both sides as explicit pair sets.
  auto naive = [](Homomorphism const& f, BinaryRelation const& S) {
    std::size_t const                    n = f.domain().size();
    std::set<std::pair<Element, Element>> img, lhs, rhs;
    for (auto [a, b] : S.pairs()) {
      img.emplace(f(a), f(b));
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (img.contains({f(a), f(b)})) {
          lhs.emplace(a, b);
        }
      }
    }
    for (auto [c, d] : S.pairs()) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (f(a) == f(c) && f(b) == f(d)) {
            rhs.emplace(a, b);
          }
        }
      }
    }
    return std::make_pair(lhs, rhs);
  };

  std::vector<FiniteAlgebra> pool = {corpus::lattice3(), corpus::s3(), klein(), l2_squared(),
                                     power(corpus::lattice2(), 3).algebra,
                                     power(corpus::z3(), 2).algebra, corpus::latticeM3()};
  std::mt19937 rng(8);
  std::size_t  checked = 0;
  while (checked < 1000) {
    auto const& A   = pool[rng() % pool.size()];
    auto const  L   = all_congruences(A);
    auto const  q   = quotient(A, L[rng() % L.size()]);
    // Random compatible relation: the subuniverse of A x A generated by a
    // few random pairs.
    std::vector<Tuple> gens;
    for (std::size_t g = 0, m = 1 + rng() % 3; g < m; ++g) {
      gens.push_back({static_cast<Element>(rng() % A.size()), static_cast<Element>(rng() % A.size())});
    }
    auto const sub = generate_subpower({A, A}, gens);
    BinaryRelation S(A.size());
    for (auto const& t : sub.tuples()) {
      S.add(t[0], t[1]);
    }
    REQUIRE(check_inverse_image_identity(q.map, S));
    auto const [lhs, rhs] = naive(q.map, S);
    REQUIRE(lhs == rhs);
    REQUIRE(lhs == as_set(preimage_of_relation(q.map, image_of_relation(q.map, S))));
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("inverse-image identity preconditions", "[congruence]") {
  auto const L2 = corpus::lattice2();
  auto const c  = Homomorphism(L2, corpus::lattice3(), {0, 2});
  CHECK_THROWS_AS(check_inverse_image_identity(c, BinaryRelation::diagonal(2)), PreconditionError);
  auto const id = identity_hom(corpus::z2());
  CHECK_THROWS_AS(check_inverse_image_identity(id, BinaryRelation(2, {{0, 1}})), PreconditionError);
}
