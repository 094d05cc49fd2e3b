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

#ifndef MAJLAB_ERROR_HPP_
#define MAJLAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace majlab {

  // Base class of every exception thrown by majlab.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: algebra files, system files, relation literals.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A documented precondition of an operation does not hold.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A size guard (congruence enumeration, product size) refused the input.
  class GuardExceeded : public Error {
   public:
    using Error::Error;
  };

  // A closure ran out of budget; carries the number of elements generated
  // before it stopped.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string const& what, std::size_t partial_count)
        : Error(what), _partial(partial_count) {}

    std::size_t partial_count() const noexcept {
      return _partial;
    }

   private:
    std::size_t _partial;
  };

}  // namespace majlab

#endif  // MAJLAB_ERROR_HPP_
