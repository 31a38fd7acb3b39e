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
 * Configuration spaces A^M with the shift action (m x)(m') = x(m' m).
 *
 * Two backends: every configuration of A^M when M is a finite monoid, and
 * the periodic points of A^Z, each stored as one period of its word.
 *
 * With this formula the shift is a left action:
 * shift(m1, shift(m2, x)) == shift(m1 * m2, x).
 */

#ifndef RFCA_SHIFT_SPACE_HPP
#define RFCA_SHIFT_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rfca/monoid.hpp"

namespace rfca {

  using symbol_type = std::uint32_t;

  /// Limit on the number of configurations any single enumeration may
  /// produce.
  inline constexpr std::uint64_t default_enumeration_cap = std::uint64_t(1) << 20;

  class Alphabet {
   public:
    explicit Alphabet(std::uint32_t size);

    std::uint32_t size() const noexcept {
      return _size;
    }

    bool operator==(Alphabet const&) const = default;

   private:
    std::uint32_t _size;
  };

  /// base^exponent, throwing CapExceeded once the value exceeds `cap`.
  std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t cap);

  /// A point of A^M for finite M.
  class Configuration {
   public:
    Configuration(FiniteMonoid monoid, std::vector<symbol_type> values);

    FiniteMonoid const& monoid() const noexcept {
      return _monoid;
    }

    std::vector<symbol_type> const& values() const noexcept {
      return _values;
    }

    symbol_type operator()(element_type m) const noexcept {
      return _values[m];
    }

    bool operator==(Configuration const& other) const {
      return _values == other._values && _monoid == other._monoid;
    }

   private:
    FiniteMonoid             _monoid;
    std::vector<symbol_type> _values;
  };

  /// The configuration k -> word[k mod n] of A^Z.
  class PeriodicWord {
   public:
    explicit PeriodicWord(std::vector<symbol_type> word);

    std::size_t period() const noexcept {
      return _word.size();
    }

    std::vector<symbol_type> const& word() const noexcept {
      return _word;
    }

    symbol_type at(std::int64_t k) const noexcept;

    /// Equality of the underlying configurations.
    bool operator==(PeriodicWord const& other) const;

    /// Total order on representations: by period, then word.
    bool representation_less(PeriodicWord const& other) const {
      return _word.size() != other._word.size() ? _word.size() < other._word.size()
                                                : _word < other._word;
    }

   private:
    std::vector<symbol_type> _word;
  };

  /// Indexes A^M lexicographically with element 0 the most significant digit
  /// and precomputes the shift action on indices.
  class ConfigurationSpace {
   public:
    ConfigurationSpace(FiniteMonoid monoid,
                       Alphabet     alphabet,
                       std::uint64_t cap = default_enumeration_cap);

    FiniteMonoid const& monoid() const noexcept {
      return _monoid;
    }

    Alphabet alphabet() const noexcept {
      return _alphabet;
    }

    std::size_t count() const noexcept {
      return _count;
    }

    std::size_t index_of(std::span<symbol_type const> values) const;
    std::size_t index_of(Configuration const& x) const;

    std::vector<symbol_type> values_of(std::size_t index) const;
    Configuration            configuration(std::size_t index) const;

    /// Index of shift(m, configuration(x)).
    std::size_t shift(element_type m, std::size_t x) const noexcept {
      return _shift[m * _count + x];
    }

   private:
    FiniteMonoid             _monoid;
    Alphabet                 _alphabet;
    std::size_t              _count;
    std::vector<std::size_t> _shift;
  };

  /// result(m') = x(m' * m).
  Configuration shift(element_type m, Configuration const& x);

  /// result.at(i) = y.at(i + k).
  PeriodicWord shift(std::int64_t k, PeriodicWord const& y);

  /// The orbit {m x : m in M}, deduplicated, in lexicographic order.
  std::vector<Configuration> orbit(Configuration const& x);

  /// The distinct rotations of y, in lexicographic order.
  std::vector<PeriodicWord> orbit(PeriodicWord const& y);

  /// Always true: A^M is finite for finite M.
  bool is_periodic(Configuration const& x) noexcept;

  /// Always true: aperiodic points of A^Z cannot be represented.
  bool is_periodic(PeriodicWord const& y) noexcept;

  /// m1 ~ m2 iff m1 y == m2 y for every y in Y. Y must be nonempty and
  /// shift-invariant, otherwise NotInvariant is thrown.
  Congruence orbit_congruence(FiniteMonoid const& M, std::span<Configuration const> Y);

  /// The smallest p dividing y.period() with y.at(i) == y.at(i mod p); the
  /// orbit congruence of y's orbit is reduction mod p.
  std::size_t integer_orbit_congruence(PeriodicWord const& y);

  /// The configurations constant on every class of gamma, in index order.
  std::vector<Configuration> inv(FiniteMonoid const& M,
                                 Congruence const&   gamma,
                                 Alphabet            A,
                                 std::uint64_t       cap = default_enumeration_cap);

  /// All words of period p, in lexicographic order.
  std::vector<PeriodicWord> inv_integer(std::size_t   p,
                                        Alphabet      A,
                                        std::uint64_t cap = default_enumeration_cap);

  struct CylinderConstraint {
    std::int64_t position;
    symbol_type  symbol;
  };

  bool in_cylinder(PeriodicWord const& y, std::span<CylinderConstraint const> constraints);

  /// A periodic point in the cylinder defined by `constraints`. Its period is
  /// the width of the constrained window (1 when there are no constraints);
  /// unconstrained positions get 0.
  PeriodicWord periodic_cylinder_witness(std::span<CylinderConstraint const> constraints,
                                         Alphabet                            A);

}  // namespace rfca

#endif  // RFCA_SHIFT_SPACE_HPP
