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
 * Finite monoids given by multiplication tables, semigroup/monoid morphisms
 * between them, congruence relations and quotients.
 *
 * Elements are dense indices 0..size-1. A congruence is stored as a
 * class-index array numbered by first occurrence, so two congruences on the
 * same monoid are equal iff their arrays are equal.
 */

#ifndef RFCA_MONOID_HPP
#define RFCA_MONOID_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rfca/error.hpp"

namespace rfca {

  using element_type = std::uint32_t;

  class FiniteMonoid {
   public:
    /// The trivial monoid.
    FiniteMonoid() : _size(1), _table{0}, _identity(0) {}

    /// Validates and builds a monoid from a row-major flat table.
    /// Throws IndexOutOfRange (as Error), NotAssociative or BadIdentity.
    FiniteMonoid(std::size_t size, std::vector<element_type> flat_table,
                 element_type identity);

    std::size_t size() const noexcept {
      return _size;
    }

    element_type identity() const noexcept {
      return _identity;
    }

    element_type product(element_type a, element_type b) const noexcept {
      return _table[a * _size + b];
    }

    std::span<element_type const> flat_table() const noexcept {
      return _table;
    }

    std::vector<std::vector<element_type>> table() const;

    bool is_commutative() const noexcept;

    bool operator==(FiniteMonoid const&) const = default;

   private:
    std::size_t               _size;
    std::vector<element_type> _table;
    element_type              _identity;
  };

  /// Builds a monoid from a square table; see the FiniteMonoid constructor.
  FiniteMonoid make_monoid(std::vector<std::vector<element_type>> const& table,
                           element_type identity);

  /// result.product(i, j) == M.product(j, i).
  FiniteMonoid opposite(FiniteMonoid const& M);

  /// Elements reachable from the identity by right-multiplying by `gens`.
  std::vector<element_type> closure(FiniteMonoid const&             M,
                                    std::span<element_type const> gens);

  /// A greedy-minimal generating set: the closure of the result (which always
  /// contains the identity) is all of M, and no element can be dropped.
  std::vector<element_type> generating_set(FiniteMonoid const& M);

  class SemigroupMorphism {
   public:
    /// Validates the morphism equation on all |S|^2 pairs, and the identity
    /// condition when `monoidal` is set. Throws InvalidMorphism.
    SemigroupMorphism(FiniteMonoid              source,
                      FiniteMonoid              target,
                      std::vector<element_type> images,
                      bool                      monoidal);

    FiniteMonoid const& source() const noexcept {
      return _source;
    }

    FiniteMonoid const& target() const noexcept {
      return _target;
    }

    std::vector<element_type> const& images() const noexcept {
      return _images;
    }

    bool monoidal() const noexcept {
      return _monoidal;
    }

    element_type operator()(element_type s) const noexcept {
      return _images[s];
    }

    bool is_surjective() const;
    bool is_injective() const;

    bool operator==(SemigroupMorphism const&) const = default;

   private:
    FiniteMonoid              _source;
    FiniteMonoid              _target;
    std::vector<element_type> _images;
    bool                      _monoidal;
  };

  SemigroupMorphism identity_morphism(FiniteMonoid const& M);

  /// outer ∘ inner (inner applied first). The result is monoidal iff both are.
  SemigroupMorphism compose(SemigroupMorphism const& outer,
                            SemigroupMorphism const& inner);

  class Congruence {
   public:
    /// Canonicalizes `class_of` (first-occurrence numbering) and checks
    /// compatibility. Throws Error(not_a_congruence) or Error(mismatch).
    Congruence(FiniteMonoid M, std::span<element_type const> class_of);

    static Congruence identity(FiniteMonoid const& M);
    static Congruence full(FiniteMonoid const& M);

    FiniteMonoid const& monoid() const noexcept {
      return _monoid;
    }

    std::vector<element_type> const& class_of() const noexcept {
      return _class_of;
    }

    element_type class_of(element_type s) const noexcept {
      return _class_of[s];
    }

    std::size_t index() const noexcept {
      return _index;
    }

    bool contains(element_type s1, element_type s2) const noexcept {
      return _class_of[s1] == _class_of[s2];
    }

    /// True iff every pair related here is related in `coarser`.
    bool is_finer_than(Congruence const& coarser) const;

    bool operator==(Congruence const&) const = default;

   private:
    FiniteMonoid              _monoid;
    std::vector<element_type> _class_of;
    std::size_t               _index;
  };

  /// True iff the partition given by `class_of` is compatible with left and
  /// right translation. Throws Error(mismatch) on a length mismatch.
  bool is_congruence(FiniteMonoid const& M, std::span<element_type const> class_of);

  Congruence kernel_relation(SemigroupMorphism const& phi);

  /// Throws Error(mismatch) if the congruences live on different monoids.
  Congruence intersect_congruences(Congruence const& g1, Congruence const& g2);

  struct QuotientResult {
    FiniteMonoid      quotient;
    SemigroupMorphism projection;
  };

  QuotientResult quotient(FiniteMonoid const& M, Congruence const& gamma);

  /// All morphisms S -> T (monoid morphisms if `monoidal`), sorted
  /// lexicographically by image array.
  std::vector<SemigroupMorphism> enumerate_morphisms(FiniteMonoid const& S,
                                                     FiniteMonoid const& T,
                                                     bool monoidal);

  /// Every congruence on M by filtering all set partitions; only for
  /// |M| <= max_congruence_search_size.
  std::vector<Congruence> enumerate_congruences(FiniteMonoid const& M);

  inline constexpr std::size_t max_congruence_search_size = 8;

  namespace catalog {
    /// Built-in monoids: trivial, z2, z3, z6, semilattice, leftzero.
    FiniteMonoid by_name(std::string_view name);

    std::vector<std::string_view> names();
  }  // namespace catalog

}  // namespace rfca

#endif  // RFCA_MONOID_HPP
