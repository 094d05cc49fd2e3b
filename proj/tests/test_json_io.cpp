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

#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace majlab;
using namespace majlab::testing;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("algebra round trip", "[json]") {
  for (auto const& A : corpus::all()) {
    auto const text = to_json(A).dump();
    CHECK(parse_algebra(text) == A);
  }
  auto const j = to_json(corpus::lattice2());
  CHECK(j["name"] == "lattice2");
  CHECK(j["operations"][0]["table"] == json::array({0, 0, 0, 1}));
}

TEST_CASE("algebra parse errors", "[json]") {
  auto const bad_len = R"({"name":"a","size":2,"operations":[
      {"name":"f","arity":2,"table":[0,1,1]}]})";
  CHECK_THROWS_WITH(parse_algebra(bad_len), ContainsSubstring("\"f\"")
                                                && ContainsSubstring("table length mismatch"));
  auto const bad_entry = R"({"name":"a","size":2,"operations":[
      {"name":"g","arity":1,"table":[0,2]}]})";
  CHECK_THROWS_WITH(parse_algebra(bad_entry), ContainsSubstring("\"g\"")
                                                  && ContainsSubstring("index 1"));
  CHECK_THROWS_AS(parse_algebra("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"size":2,"operations":[]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"name":"a","size":0,"operations":[]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"name":"a","size":-1,"operations":[]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"name":"a","size":2,"operations":{}})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"name":"a","size":2,"operations":[
      {"name":"f","arity":1,"table":[0,"1"]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"name":"a","size":2,"operations":[
      {"name":"f","arity":1,"table":[0,1]},{"name":"f","arity":1,"table":[0,1]}]})"),
                  ParseError);
  CHECK_THROWS_AS(load_algebra("/nonexistent/algebra.json"), ParseError);
}

TEST_CASE("relation and partition round trip", "[json]") {
  BinaryRelation const R(3, {{2, 0}, {0, 1}});
  auto const           j = to_json(R);
  CHECK(j.dump() == R"({"size":3,"pairs":[[0,1],[2,0]]})");
  CHECK(relation_from_json(j) == R);
  CHECK_THROWS_AS(relation_from_json(json::parse(R"({"size":2,"pairs":[[0,2]]})")), ParseError);
  CHECK_THROWS_AS(relation_from_json(json::parse(R"({"size":2,"pairs":[[0]]})")), ParseError);

  CHECK(to_json(k_gamma()).dump() == R"({"blocks":[[0,3],[1,2]]})");
  CHECK(congruence_from_json(to_json(k_beta()), 4) == k_beta());
  CHECK_THROWS_AS(congruence_from_json(json::parse(R"({"blocks":[[0,1]]})"), 4), ParseError);
  CHECK_THROWS_AS(congruence_from_json(json::parse(R"({"blocks":[0,1]})"), 2), ParseError);
}

TEST_CASE("subpower and witness serialisation", "[json]") {
  auto const Z2 = corpus::z2();
  auto const S  = generate_subpower({Z2, Z2, Z2}, {{1, 1, 0}, {1, 0, 1}});
  CHECK(to_json(S).dump()
        == R"({"factors":[2,2,2],"tuples":[[0,0,0],[0,1,1],[1,0,1],[1,1,0]]})");
  CHECK(to_json(TernaryWitness{0, 0, 1, 1, 1, 0}).dump()
        == R"({"x":0,"y":0,"z":1,"x'":1,"y'":1,"z'":0})");
}

TEST_CASE("clone report serialisation", "[json]") {
  auto const j = to_json(find_majority_term(corpus::majalg2()));
  CHECK(j["found"] == true);
  CHECK(j["term"] == "maj(x0,x1,x2)");
  CHECK(j["table"] == json::array({0, 0, 0, 1, 0, 1, 1, 1}));
  CHECK(j["exhausted"] == true);
  auto const z = to_json(find_majority_term(corpus::z2()));
  CHECK(z["found"] == false);
  CHECK(z["term"].is_null());
  CHECK(z["clone_size"] == 8);
}

TEST_CASE("system files", "[json]") {
  auto const K    = klein();
  auto const text = R"({"algebra":"klein.json","rows":[
      {"blocks":[[0,1],[2,3]],"element":0},
      {"blocks":[[0,2],[1,3]],"element":0},
      {"blocks":[[0,3],[1,2]],"element":2}]})";
  auto const sys = parse_system(text, K);
  REQUIRE(sys.size() == 3);
  CHECK(sys.rows()[2].theta == k_gamma());
  CHECK(sys.rows()[2].element == 2);
  CHECK(parse_system(system_to_json(sys, "klein.json").dump(), K).rows()[1].theta == k_beta());
  CHECK(system_to_json(sys, "k").dump().starts_with(R"({"algebra":"k","rows":[{"blocks")"));

  CHECK_THROWS_AS(parse_system(R"({"rows":[{"blocks":[[0,1],[2,3]],"element":4}]})", K),
                  ParseError);
  CHECK_THROWS_AS(parse_system(R"({"rows":[{"blocks":[[0,1],[2,3]]}]})", K), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"rows":{}})", K), ParseError);
  // A partition that is not a congruence of L2^2.
  CHECK_THROWS_AS(parse_system(R"({"rows":[{"blocks":[[0,3],[1,2]],"element":0}]})",
                               l2_squared()),
                  ParseError);

  auto const rep = to_json(solve_brute(sys));
  CHECK(rep.dump()
        == R"({"pairwise_solvable":true,"failing_pair":null,"solution":null,"method":"brute"})");
}
