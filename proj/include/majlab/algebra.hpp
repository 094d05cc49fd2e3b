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

// Finite algebras given by operation tables, term expressions, direct
// products with their element codec, and homomorphisms.

#ifndef MAJLAB_ALGEBRA_HPP_
#define MAJLAB_ALGEBRA_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"

namespace majlab {

  using Element = std::uint32_t;
  using Tuple   = std::vector<Element>;

  // Largest operation table (number of entries) we are prepared to build.
  inline constexpr std::size_t max_table_entries = std::size_t(1) << 26;

  namespace detail {
    // n^k, or nullopt if it exceeds `limit`.
    inline std::optional<std::size_t> checked_pow(std::size_t n,
                                                  std::size_t k,
                                                  std::size_t limit) {
      std::size_t result = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (n != 0 && result > limit / n) {
          return std::nullopt;
        }
        result *= n;
      }
      if (result > limit) {
        return std::nullopt;
      }
      return result;
    }

    inline std::string join_elements(std::span<Element const> xs) {
      std::string out = "(";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) {
          out += ",";
        }
        out += std::to_string(xs[i]);
      }
      return out + ")";
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Signature
  ////////////////////////////////////////////////////////////////////////

  struct OperationSymbol {
    std::string name;
    std::size_t arity;

    bool operator==(OperationSymbol const&) const = default;
  };

  class Signature {
   public:
    Signature() = default;

    explicit Signature(std::vector<OperationSymbol> ops) : _ops(std::move(ops)) {
      for (std::size_t i = 0; i < _ops.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (_ops[i].name == _ops[j].name) {
            throw PreconditionError("duplicate operation name \"" + _ops[i].name
                                    + "\" in signature");
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return _ops.size();
    }

    OperationSymbol const& operator[](std::size_t i) const {
      return _ops.at(i);
    }

    std::optional<std::size_t> find(std::string_view name) const {
      for (std::size_t i = 0; i < _ops.size(); ++i) {
        if (_ops[i].name == name) {
          return i;
        }
      }
      return std::nullopt;
    }

    bool has_constants() const {
      return std::any_of(_ops.begin(), _ops.end(), [](auto const& op) {
        return op.arity == 0;
      });
    }

    std::size_t max_arity() const {
      std::size_t result = 0;
      for (auto const& op : _ops) {
        result = std::max(result, op.arity);
      }
      return result;
    }

    auto begin() const {
      return _ops.begin();
    }
    auto end() const {
      return _ops.end();
    }

    bool operator==(Signature const&) const = default;

   private:
    std::vector<OperationSymbol> _ops;
  };

  ////////////////////////////////////////////////////////////////////////
  // FiniteAlgebra
  ////////////////////////////////////////////////////////////////////////

  // Universe {0, ..., size-1}. For an operation of arity k the table entry
  // for (a_1, ..., a_k) sits at index sum a_i * n^(k-i), i.e. the leftmost
  // argument is the most significant digit.
  class FiniteAlgebra {
   public:
    FiniteAlgebra() = default;

    FiniteAlgebra(std::string                       name,
                  std::size_t                       size,
                  Signature                         signature,
                  std::vector<std::vector<Element>> tables)
        : _name(std::move(name)),
          _size(size),
          _signature(std::move(signature)),
          _tables(std::move(tables)) {
      if (_size == 0) {
        throw PreconditionError("algebra \"" + _name + "\": size must be positive");
      }
      if (_tables.size() != _signature.size()) {
        throw PreconditionError("algebra \"" + _name
                                + "\": number of tables differs from signature");
      }
      for (std::size_t op = 0; op < _tables.size(); ++op) {
        auto const& sym      = _signature[op];
        auto        expected = detail::checked_pow(_size, sym.arity, max_table_entries);
        if (!expected) {
          throw GuardExceeded("operation \"" + sym.name + "\": table too large");
        }
        if (_tables[op].size() != *expected) {
          throw PreconditionError("operation \"" + sym.name
                                  + "\": table length mismatch (expected "
                                  + std::to_string(*expected) + ", got "
                                  + std::to_string(_tables[op].size()) + ")");
        }
        for (std::size_t i = 0; i < _tables[op].size(); ++i) {
          if (_tables[op][i] >= _size) {
            throw PreconditionError("operation \"" + sym.name
                                    + "\": entry out of range at index "
                                    + std::to_string(i));
          }
        }
      }
    }

    std::string const& name() const noexcept {
      return _name;
    }

    std::size_t size() const noexcept {
      return _size;
    }

    Signature const& signature() const noexcept {
      return _signature;
    }

    std::size_t number_of_operations() const noexcept {
      return _tables.size();
    }

    std::size_t arity(std::size_t op) const {
      return _signature[op].arity;
    }

    std::vector<Element> const& table(std::size_t op) const {
      return _tables.at(op);
    }

    std::size_t table_index(std::span<Element const> args) const noexcept {
      std::size_t index = 0;
      for (auto a : args) {
        index = index * _size + a;
      }
      return index;
    }

    Element apply(std::size_t op, std::span<Element const> args) const {
      return _tables[op][table_index(args)];
    }

    Element apply(std::size_t op, std::initializer_list<Element> args) const {
      return apply(op, std::span<Element const>(args.begin(), args.size()));
    }

    Element apply(std::string_view op_name, std::initializer_list<Element> args) const {
      auto op = _signature.find(op_name);
      if (!op) {
        throw PreconditionError("unknown operation \"" + std::string(op_name) + "\"");
      }
      return apply(*op, args);
    }

    FiniteAlgebra renamed(std::string name) const {
      FiniteAlgebra copy = *this;
      copy._name         = std::move(name);
      return copy;
    }

    bool operator==(FiniteAlgebra const& that) const {
      return _size == that._size && _signature == that._signature
             && _tables == that._tables;
    }

   private:
    std::string                       _name;
    std::size_t                       _size = 0;
    Signature                         _signature;
    std::vector<std::vector<Element>> _tables;
  };

  // Is `subset` closed under every operation? Returns the first violating
  // (operation, arguments) pair in lexicographic order if not.
  struct ClosureViolation {
    std::string op;
    Tuple       args;
    Element     result;
  };

  inline std::optional<ClosureViolation>
  find_closure_violation(FiniteAlgebra const& A, std::span<Element const> subset) {
    std::vector<bool> member(A.size(), false);
    for (auto x : subset) {
      if (x >= A.size()) {
        throw PreconditionError("element " + std::to_string(x) + " out of range");
      }
      member[x] = true;
    }
    std::vector<Element> elems;
    for (Element x = 0; x < A.size(); ++x) {
      if (member[x]) {
        elems.push_back(x);
      }
    }
    for (std::size_t op = 0; op < A.number_of_operations(); ++op) {
      std::size_t const k = A.arity(op);
      if (k == 0) {
        Element c = A.table(op)[0];
        if (!member[c]) {
          return ClosureViolation{A.signature()[op].name, {}, c};
        }
        continue;
      }
      if (elems.empty()) {
        continue;
      }
      std::vector<std::size_t> pos(k, 0);
      Tuple                    args(k);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) {
          args[i] = elems[pos[i]];
        }
        Element r = A.apply(op, args);
        if (!member[r]) {
          return ClosureViolation{A.signature()[op].name, args, r};
        }
        std::size_t i = k;
        while (i > 0 && ++pos[i - 1] == elems.size()) {
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

  ////////////////////////////////////////////////////////////////////////
  // Terms
  ////////////////////////////////////////////////////////////////////////

  // Either a variable x_i or an operation symbol applied to subterms.
  // Subterms are shared, so copying is cheap and closure algorithms can build
  // witnesses without duplicating trees.
  class TermExpr {
   public:
    static TermExpr variable(std::size_t index) {
      TermExpr t;
      t._node = std::make_shared<Node const>(Node{true, index, {}, {}});
      return t;
    }

    static TermExpr apply(std::string op, std::vector<TermExpr> children) {
      TermExpr t;
      t._node = std::make_shared<Node const>(Node{false, 0, std::move(op), std::move(children)});
      return t;
    }

    bool is_variable() const {
      return _node->is_variable;
    }

    std::size_t variable_index() const {
      return _node->index;
    }

    std::string const& op() const {
      return _node->op;
    }

    std::vector<TermExpr> const& children() const {
      return _node->children;
    }

    // One more than the largest variable index occurring in the term.
    std::size_t variable_bound() const {
      if (is_variable()) {
        return variable_index() + 1;
      }
      std::size_t result = 0;
      for (auto const& c : children()) {
        result = std::max(result, c.variable_bound());
      }
      return result;
    }

    std::size_t depth() const {
      std::size_t result = 0;
      if (!is_variable()) {
        for (auto const& c : children()) {
          result = std::max(result, c.depth() + 1);
        }
        result = std::max<std::size_t>(result, 1);
      }
      return result;
    }

    // Prefix notation, e.g. join(meet(x0,x1),x2).
    std::string to_string() const {
      if (is_variable()) {
        return "x" + std::to_string(variable_index());
      }
      std::string out = op() + "(";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i != 0) {
          out += ",";
        }
        out += children()[i].to_string();
      }
      return out + ")";
    }

   private:
    struct Node {
      bool                  is_variable;
      std::size_t           index;
      std::string           op;
      std::vector<TermExpr> children;
    };

    TermExpr() = default;

    std::shared_ptr<Node const> _node;
  };

  inline Element eval_term(FiniteAlgebra const&     A,
                           TermExpr const&          t,
                           std::span<Element const> args) {
    if (t.is_variable()) {
      if (t.variable_index() >= args.size()) {
        throw PreconditionError("term uses x" + std::to_string(t.variable_index())
                                + " but only " + std::to_string(args.size())
                                + " arguments were supplied");
      }
      Element x = args[t.variable_index()];
      if (x >= A.size()) {
        throw PreconditionError("argument " + std::to_string(x) + " out of range");
      }
      return x;
    }
    auto op = A.signature().find(t.op());
    if (!op) {
      throw PreconditionError("unknown operation \"" + t.op() + "\" in term");
    }
    if (A.arity(*op) != t.children().size()) {
      throw PreconditionError("arity mismatch for \"" + t.op() + "\": expected "
                              + std::to_string(A.arity(*op)) + ", got "
                              + std::to_string(t.children().size()));
    }
    Tuple values;
    values.reserve(t.children().size());
    for (auto const& c : t.children()) {
      values.push_back(eval_term(A, c, args));
    }
    return A.apply(*op, values);
  }

  inline Element eval_term(FiniteAlgebra const&           A,
                           TermExpr const&                t,
                           std::initializer_list<Element> args) {
    return eval_term(A, t, std::span<Element const>(args.begin(), args.size()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  // Mixed-radix codec for elements of A_1 x ... x A_k, leftmost factor most
  // significant: (a_1, ..., a_k) <-> sum a_i * prod_{j>i} n_j.
  class ProductCodec {
   public:
    ProductCodec() = default;

    explicit ProductCodec(std::vector<std::size_t> radices) : _radices(std::move(radices)) {
      _size = 1;
      for (auto r : _radices) {
        if (r == 0) {
          throw PreconditionError("product factor of size 0");
        }
        if (_size > std::numeric_limits<std::uint32_t>::max() / r) {
          throw GuardExceeded("product too large to encode");
        }
        _size *= r;
      }
    }

    std::size_t size() const noexcept {
      return _size;
    }

    std::size_t factor_count() const noexcept {
      return _radices.size();
    }

    std::vector<std::size_t> const& radices() const noexcept {
      return _radices;
    }

    Element encode(std::span<Element const> coords) const {
      if (coords.size() != _radices.size()) {
        throw PreconditionError("tuple length differs from number of factors");
      }
      std::size_t e = 0;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= _radices[i]) {
          throw PreconditionError("coordinate " + std::to_string(i) + " out of range");
        }
        e = e * _radices[i] + coords[i];
      }
      return static_cast<Element>(e);
    }

    Element encode(std::initializer_list<Element> coords) const {
      return encode(std::span<Element const>(coords.begin(), coords.size()));
    }

    Tuple decode(Element e) const {
      Tuple coords(_radices.size());
      for (std::size_t i = _radices.size(); i-- > 0;) {
        coords[i] = static_cast<Element>(e % _radices[i]);
        e /= static_cast<Element>(_radices[i]);
      }
      return coords;
    }

   private:
    std::vector<std::size_t> _radices;
    std::size_t              _size = 1;
  };

  struct ProductAlgebra {
    FiniteAlgebra algebra;
    ProductCodec  codec;
  };

  inline ProductAlgebra product(std::span<FiniteAlgebra const> factors,
                                std::string                    name = "") {
    if (factors.empty()) {
      throw PreconditionError("product of an empty list of algebras");
    }
    Signature const& sig = factors[0].signature();
    std::vector<std::size_t> radices;
    for (auto const& f : factors) {
      if (!(f.signature() == sig)) {
        throw PreconditionError("signature mismatch: \"" + f.name() + "\" vs \""
                                + factors[0].name() + "\"");
      }
      radices.push_back(f.size());
    }
    if (name.empty()) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        name += (i == 0 ? "" : "x") + factors[i].name();
      }
    }
    ProductCodec                      codec(radices);
    std::size_t const                 n = codec.size();
    std::vector<std::vector<Element>> tables;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t k   = sig[op].arity;
      auto        len = detail::checked_pow(n, k, max_table_entries);
      if (!len) {
        throw GuardExceeded("product table for \"" + sig[op].name + "\" too large");
      }
      std::vector<Element> table(*len);
      std::vector<Tuple>   decoded(k);
      Tuple                args(k), coords(factors.size());
      for (std::size_t idx = 0; idx < *len; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = k; i-- > 0;) {
          args[i] = static_cast<Element>(rest % n);
          rest /= n;
        }
        for (std::size_t i = 0; i < k; ++i) {
          decoded[i] = codec.decode(args[i]);
        }
        Tuple fargs(k);
        for (std::size_t c = 0; c < factors.size(); ++c) {
          for (std::size_t i = 0; i < k; ++i) {
            fargs[i] = decoded[i][c];
          }
          coords[c] = factors[c].apply(op, fargs);
        }
        table[idx] = codec.encode(coords);
      }
      tables.push_back(std::move(table));
    }
    return ProductAlgebra{FiniteAlgebra(std::move(name), n, sig, std::move(tables)),
                          std::move(codec)};
  }

  inline ProductAlgebra power(FiniteAlgebra const& A, std::size_t exponent) {
    if (exponent == 0) {
      throw PreconditionError("power exponent must be positive");
    }
    std::vector<FiniteAlgebra> factors(exponent, A);
    std::string name = exponent == 1 ? A.name() : A.name() + "^" + std::to_string(exponent);
    return product(factors, name);
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  class Homomorphism {
   public:
    // Throws PreconditionError if `map` does not commute with every
    // operation (checked exhaustively).
    Homomorphism(FiniteAlgebra domain, FiniteAlgebra codomain, std::vector<Element> map)
        : _domain(std::move(domain)), _codomain(std::move(codomain)), _map(std::move(map)) {
      if (!(_domain.signature() == _codomain.signature())) {
        throw PreconditionError("homomorphism between different signatures");
      }
      if (_map.size() != _domain.size()) {
        throw PreconditionError("homomorphism map has wrong length");
      }
      for (auto y : _map) {
        if (y >= _codomain.size()) {
          throw PreconditionError("homomorphism value out of range");
        }
      }
      if (auto bad = find_violation()) {
        throw PreconditionError("map is not a homomorphism: fails on \"" + bad->first
                                + "\" at " + detail::join_elements(bad->second));
      }
    }

    FiniteAlgebra const& domain() const noexcept {
      return _domain;
    }

    FiniteAlgebra const& codomain() const noexcept {
      return _codomain;
    }

    std::vector<Element> const& map() const noexcept {
      return _map;
    }

    Element operator()(Element x) const {
      return _map.at(x);
    }

    bool is_surjective() const {
      std::vector<bool> hit(_codomain.size(), false);
      for (auto y : _map) {
        hit[y] = true;
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

   private:
    std::optional<std::pair<std::string, Tuple>> find_violation() const {
      std::size_t const n = _domain.size();
      for (std::size_t op = 0; op < _domain.number_of_operations(); ++op) {
        std::size_t k   = _domain.arity(op);
        auto const& tab = _domain.table(op);
        Tuple       args(k), images(k);
        for (std::size_t idx = 0; idx < tab.size(); ++idx) {
          std::size_t rest = idx;
          for (std::size_t i = k; i-- > 0;) {
            args[i] = static_cast<Element>(rest % n);
            rest /= n;
          }
          for (std::size_t i = 0; i < k; ++i) {
            images[i] = _map[args[i]];
          }
          if (_map[tab[idx]] != _codomain.apply(op, images)) {
            return std::make_pair(_domain.signature()[op].name, args);
          }
        }
      }
      return std::nullopt;
    }

    FiniteAlgebra        _domain;
    FiniteAlgebra        _codomain;
    std::vector<Element> _map;
  };

  inline Homomorphism identity_hom(FiniteAlgebra const& A) {
    std::vector<Element> map(A.size());
    for (Element x = 0; x < A.size(); ++x) {
      map[x] = x;
    }
    return Homomorphism(A, A, std::move(map));
  }

  // g after f.
  inline Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
    if (!(f.codomain() == g.domain())) {
      throw PreconditionError("cannot compose: codomain of f is not the domain of g");
    }
    std::vector<Element> map(f.domain().size());
    for (Element x = 0; x < map.size(); ++x) {
      map[x] = g(f(x));
    }
    return Homomorphism(f.domain(), g.codomain(), std::move(map));
  }

  inline Homomorphism projection(ProductAlgebra const& P,
                                 std::size_t           i,
                                 FiniteAlgebra const&  factor) {
    if (i >= P.codec.factor_count() || P.codec.radices()[i] != factor.size()) {
      throw PreconditionError("projection index or factor does not match the product");
    }
    std::vector<Element> map(P.algebra.size());
    for (Element x = 0; x < map.size(); ++x) {
      map[x] = P.codec.decode(x)[i];
    }
    return Homomorphism(P.algebra, factor, std::move(map));
  }

  // Image of a subuniverse of the domain; sorted ascending. Throws if
  // `subset` is not closed under the operations of the domain.
  inline std::vector<Element> image_of_hom(Homomorphism const&      f,
                                           std::span<Element const> subset) {
    if (auto bad = find_closure_violation(f.domain(), subset)) {
      throw PreconditionError("subset is not closed: " + bad->op
                              + detail::join_elements(bad->args) + " = "
                              + std::to_string(bad->result) + " is missing");
    }
    std::vector<Element> out;
    for (auto x : subset) {
      out.push_back(f(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

}  // namespace majlab

#endif  // MAJLAB_ALGEBRA_HPP_
