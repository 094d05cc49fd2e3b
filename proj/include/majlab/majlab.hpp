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

#ifndef MAJLAB_MAJLAB_HPP_
#define MAJLAB_MAJLAB_HPP_

#include "algebra.hpp"
#include "checkers.hpp"
#include "clone.hpp"
#include "congruence.hpp"
#include "corpus.hpp"
#include "crt.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "recheck.hpp"
#include "relation.hpp"
#include "subpower.hpp"

#endif  // MAJLAB_MAJLAB_HPP_
