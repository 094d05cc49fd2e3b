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

// JSON file formats:
//
//   algebra   {"name": str, "size": int,
//              "operations": [{"name": str, "arity": int, "table": [int, ...]}]}
//   relation  {"size": n, "pairs": [[i, j], ...]}          pairs sorted
//   subpower  {"factors": [size, ...], "tuples": [[...], ...]}  tuples sorted
//   partition {"blocks": [[...], ...]}                     blocks by least element
//   system    {"algebra": path, "rows": [{"blocks": [[...]], "element": int}]}

#ifndef MAJLAB_JSON_IO_HPP_
#define MAJLAB_JSON_IO_HPP_

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "clone.hpp"
#include "congruence.hpp"
#include "crt.hpp"
#include "error.hpp"
#include "relation.hpp"
#include "subpower.hpp"

namespace majlab {

  using json = nlohmann::ordered_json;

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot open \"" + path + "\"");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  namespace detail {
    inline json parse_json(std::string_view text) {
      try {
        return json::parse(text);
      } catch (nlohmann::json::exception const& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
      }
    }

    inline json const& field(json const& j, char const* key, char const* context) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string(context) + ": missing field \"" + key + "\"");
      }
      return j.at(key);
    }

    inline std::size_t as_index(json const& j, std::string const& context) {
      if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParseError(context + ": expected a non-negative integer");
      }
      return j.get<std::size_t>();
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Algebras
  ////////////////////////////////////////////////////////////////////////

  inline FiniteAlgebra parse_algebra(std::string_view text) {
    json const  j    = detail::parse_json(text);
    auto const& name = detail::field(j, "name", "algebra");
    if (!name.is_string()) {
      throw ParseError("algebra: \"name\" must be a string");
    }
    std::size_t const n = detail::as_index(detail::field(j, "size", "algebra"), "algebra size");
    if (n == 0) {
      throw ParseError("algebra: size must be positive");
    }
    auto const& ops = detail::field(j, "operations", "algebra");
    if (!ops.is_array()) {
      throw ParseError("algebra: \"operations\" must be an array");
    }
    std::vector<OperationSymbol>      symbols;
    std::vector<std::vector<Element>> tables;
    for (auto const& op : ops) {
      auto const& op_name = detail::field(op, "name", "operation");
      if (!op_name.is_string()) {
        throw ParseError("operation: \"name\" must be a string");
      }
      std::string const s     = op_name.get<std::string>();
      std::size_t const arity = detail::as_index(detail::field(op, "arity", "operation"),
                                                 "operation \"" + s + "\" arity");
      auto const&       table = detail::field(op, "table", "operation");
      if (!table.is_array()) {
        throw ParseError("operation \"" + s + "\": \"table\" must be an array");
      }
      auto expected = majlab::detail::checked_pow(n, arity, max_table_entries);
      if (!expected) {
        throw ParseError("operation \"" + s + "\": table too large");
      }
      if (table.size() != *expected) {
        throw ParseError("operation \"" + s + "\": table length mismatch (expected "
                         + std::to_string(*expected) + ", got " + std::to_string(table.size())
                         + ")");
      }
      std::vector<Element> values;
      values.reserve(table.size());
      for (std::size_t i = 0; i < table.size(); ++i) {
        std::size_t v = detail::as_index(table[i], "operation \"" + s + "\" index "
                                                       + std::to_string(i));
        if (v >= n) {
          throw ParseError("operation \"" + s + "\": entry out of range at index "
                           + std::to_string(i));
        }
        values.push_back(static_cast<Element>(v));
      }
      symbols.push_back({s, arity});
      tables.push_back(std::move(values));
    }
    try {
      return FiniteAlgebra(name.get<std::string>(), n, Signature(std::move(symbols)),
                           std::move(tables));
    } catch (PreconditionError const& e) {
      throw ParseError(e.what());
    }
  }

  inline FiniteAlgebra load_algebra(std::string const& path) {
    return parse_algebra(read_file(path));
  }

  inline json to_json(FiniteAlgebra const& A) {
    json ops = json::array();
    for (std::size_t op = 0; op < A.number_of_operations(); ++op) {
      ops.push_back({{"name", A.signature()[op].name},
                     {"arity", A.arity(op)},
                     {"table", A.table(op)}});
    }
    return {{"name", A.name()}, {"size", A.size()}, {"operations", ops}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations, partitions, subpowers
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(BinaryRelation const& R) {
    json pairs = json::array();
    for (auto [a, b] : R.pairs()) {
      pairs.push_back({a, b});
    }
    return {{"size", R.size()}, {"pairs", pairs}};
  }

  inline BinaryRelation relation_from_json(json const& j) {
    std::size_t const n = detail::as_index(detail::field(j, "size", "relation"), "relation size");
    BinaryRelation    R(n);
    for (auto const& p : detail::field(j, "pairs", "relation")) {
      if (!p.is_array() || p.size() != 2) {
        throw ParseError("relation: each pair must be a 2-element array");
      }
      auto a = detail::as_index(p[0], "relation pair"), b = detail::as_index(p[1], "relation pair");
      if (a >= n || b >= n) {
        throw ParseError("relation: pair out of range");
      }
      R.add(static_cast<Element>(a), static_cast<Element>(b));
    }
    return R;
  }

  inline json to_json(Congruence const& theta) {
    return {{"blocks", theta.blocks()}};
  }

  inline Congruence congruence_from_json(json const& j, std::size_t n) {
    auto const& blocks = detail::field(j, "blocks", "partition");
    if (!blocks.is_array()) {
      throw ParseError("partition: \"blocks\" must be an array");
    }
    std::vector<std::vector<Element>> bs;
    for (auto const& b : blocks) {
      if (!b.is_array()) {
        throw ParseError("partition: each block must be an array");
      }
      std::vector<Element> block;
      for (auto const& x : b) {
        block.push_back(static_cast<Element>(detail::as_index(x, "partition element")));
      }
      bs.push_back(std::move(block));
    }
    return Congruence::from_blocks(n, bs);
  }

  inline json to_json(SubPower const& S) {
    json sizes = json::array();
    for (auto const& f : S.factors()) {
      sizes.push_back(f.size());
    }
    return {{"factors", sizes}, {"tuples", S.tuples()}};
  }

  inline json to_json(TernaryWitness const& w) {
    return {{"x", w.x},   {"y", w.y},   {"z", w.z},
            {"x'", w.x2}, {"y'", w.y2}, {"z'", w.z2}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Clone reports
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(CloneSearchReport const& r) {
    json out;
    out["found"] = r.found.has_value();
    out["term"]  = r.found ? json(r.found->witness().to_string()) : json(nullptr);
    out["table"] = r.found ? json(r.found->table()) : json::array();
    out["clone_size"] = r.generated_count;
    out["exhausted"]  = r.exhausted;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence systems
  ////////////////////////////////////////////////////////////////////////

  // The "algebra" field of a system file is informational; the caller
  // supplies the algebra.
  inline CongruenceSystem parse_system(std::string_view text, FiniteAlgebra const& A) {
    json const  j    = detail::parse_json(text);
    auto const& rows = detail::field(j, "rows", "system");
    if (!rows.is_array()) {
      throw ParseError("system: \"rows\" must be an array");
    }
    std::vector<SystemRow> out;
    for (auto const& r : rows) {
      auto theta = congruence_from_json(r, A.size());
      auto e     = detail::as_index(detail::field(r, "element", "system row"), "system element");
      if (e >= A.size()) {
        throw ParseError("system: element " + std::to_string(e) + " out of range");
      }
      out.push_back({std::move(theta), static_cast<Element>(e)});
    }
    try {
      return CongruenceSystem(A, std::move(out));
    } catch (PreconditionError const& e) {
      throw ParseError(e.what());
    }
  }

  inline json system_to_json(CongruenceSystem const& sys, std::string const& algebra_ref) {
    json rows = json::array();
    for (auto const& r : sys.rows()) {
      rows.push_back({{"blocks", r.theta.blocks()}, {"element", r.element}});
    }
    return {{"algebra", algebra_ref}, {"rows", rows}};
  }

  inline json to_json(SolveReport const& r) {
    json out;
    out["pairwise_solvable"] = r.pairwise.solvable;
    out["failing_pair"]      = r.pairwise.failing_pair
                                   ? json({r.pairwise.failing_pair->first,
                                           r.pairwise.failing_pair->second})
                                   : json(nullptr);
    out["solution"]          = r.solution ? json(*r.solution) : json(nullptr);
    out["method"]            = to_string(r.method);
    return out;
  }

}  // namespace majlab

#endif  // MAJLAB_JSON_IO_HPP_
