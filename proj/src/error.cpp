/*
 *   Copyright 2026 The rfca Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rfca/error.hpp"

#include <string>

namespace rfca {

  namespace {
    std::string triple(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
      return "(" + std::to_string(i) + ", " + std::to_string(j) + ", "
             + std::to_string(k) + ")";
    }
  }  // namespace

  NotAssociative::NotAssociative(std::uint32_t i_, std::uint32_t j_, std::uint32_t k_)
      : Error(ErrorKind::not_associative,
              "table is not associative at triple " + triple(i_, j_, k_)),
        i(i_),
        j(j_),
        k(k_) {}

  BadIdentity::BadIdentity(std::uint32_t e)
      : Error(ErrorKind::bad_identity,
              "declared identity does not act trivially on element "
                  + std::to_string(e)),
        element(e) {}

  InvalidMorphism::InvalidMorphism(std::uint32_t a, std::uint32_t b, std::string const& why)
      : Error(ErrorKind::invalid_morphism,
              "invalid morphism at pair (" + std::to_string(a) + ", "
                  + std::to_string(b) + "): " + why),
        s1(a),
        s2(b) {}

  NotInvariant::NotInvariant(std::uint32_t m, std::size_t y)
      : Error(ErrorKind::not_invariant,
              "set is not shift-invariant: shifting configuration #"
                  + std::to_string(y) + " by element " + std::to_string(m)
                  + " leaves the set"),
        element(m),
        configuration(y) {}

  NotClosed::NotClosed(std::size_t p)
      : Error(ErrorKind::not_closed,
              "X not closed: image of element #" + std::to_string(p)
                  + " leaves X"),
        position(p) {}

}  // namespace rfca
