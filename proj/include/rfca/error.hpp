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

/**
 * @file
 *
 * Exception types thrown by the rfca core. Every error carries an
 * ErrorKind so the C API can translate it into a status code without
 * parsing messages.
 */

#ifndef RFCA_ERROR_HPP
#define RFCA_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rfca {

  enum class ErrorKind {
    invalid_argument,
    index_out_of_range,
    not_associative,
    bad_identity,
    not_a_congruence,
    invalid_morphism,
    mismatch,
    not_invariant,
    not_closed,
    not_distinct,
    cap_exceeded,
    contradictory_constraints,
    no_separating_morphism,
    parse_error,
    internal
  };

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  /// Associativity fails at (i j) k != i (j k).
  class NotAssociative : public Error {
   public:
    NotAssociative(std::uint32_t i, std::uint32_t j, std::uint32_t k);
    std::uint32_t i, j, k;
  };

  /// The declared identity does not act trivially on `element`.
  class BadIdentity : public Error {
   public:
    explicit BadIdentity(std::uint32_t element);
    std::uint32_t element;
  };

  /// The morphism equation fails on the pair (s1, s2).
  class InvalidMorphism : public Error {
   public:
    InvalidMorphism(std::uint32_t s1, std::uint32_t s2, std::string const& why);
    std::uint32_t s1, s2;
  };

  /// A set of configurations is not closed under the shift by `element`;
  /// `configuration` is the position in the input set of the offending point.
  class NotInvariant : public Error {
   public:
    NotInvariant(std::uint32_t element, std::size_t configuration);
    std::uint32_t element;
    std::size_t   configuration;
  };

  /// A map sends X[`position`] outside X.
  class NotClosed : public Error {
   public:
    explicit NotClosed(std::size_t position);
    std::size_t position;
  };

  class NotDistinct : public Error {
   public:
    explicit NotDistinct(std::string const& what)
        : Error(ErrorKind::not_distinct, what) {}
  };

  class CapExceeded : public Error {
   public:
    explicit CapExceeded(std::string const& what)
        : Error(ErrorKind::cap_exceeded, what) {}
  };

}  // namespace rfca

#endif  // RFCA_ERROR_HPP
