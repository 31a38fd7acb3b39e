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
 * Cellular automata over a monoid M and alphabet A.
 *
 * For finite M an automaton is stored as its full graph on A^M (indices as in
 * ConfigurationSpace). Over Z it is a local rule of radius r: a table from
 * (2r+1)-symbol windows, read left to right with the leftmost symbol most
 * significant, to one symbol. Elementary rules follow the Wolfram numbering.
 */

#ifndef RFCA_CELLULAR_HPP
#define RFCA_CELLULAR_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "rfca/shift_space.hpp"

namespace rfca {

  /// Upper bound on |CA(M, A)| for enumerate_ca.
  inline constexpr std::uint64_t max_enumerated_maps = std::uint64_t(1) << 20;

  class EquivariantMap {
   public:
    /// Throws Error(invalid_argument) if `graph` does not commute with the
    /// shift.
    EquivariantMap(FiniteMonoid M, Alphabet A, std::vector<std::size_t> graph);

    EquivariantMap(std::shared_ptr<ConfigurationSpace const> space,
                   std::vector<std::size_t>                  graph);

    static EquivariantMap identity(FiniteMonoid M, Alphabet A);

    FiniteMonoid const& monoid() const noexcept {
      return _space->monoid();
    }

    Alphabet alphabet() const noexcept {
      return _space->alphabet();
    }

    ConfigurationSpace const& space() const noexcept {
      return *_space;
    }

    std::shared_ptr<ConfigurationSpace const> const& shared_space() const noexcept {
      return _space;
    }

    std::vector<std::size_t> const& graph() const noexcept {
      return _graph;
    }

    std::size_t operator()(std::size_t x) const noexcept {
      return _graph[x];
    }

    Configuration operator()(Configuration const& x) const;

    bool operator==(EquivariantMap const& other) const {
      return _graph == other._graph && monoid() == other.monoid()
             && alphabet() == other.alphabet();
    }

   private:
    std::shared_ptr<ConfigurationSpace const> _space;
    std::vector<std::size_t>                  _graph;
  };

  /// True iff graph(shift(m, x)) == shift(m, graph(x)) for all m, x.
  bool is_equivariant(ConfigurationSpace const& space, std::span<std::size_t const> graph);
  bool is_equivariant(FiniteMonoid const& M, Alphabet A, std::span<std::size_t const> graph);

  /// The automaton x -> (m' -> mu(m' x)); `mu` is indexed by configuration.
  /// Every automaton arises this way from mu(x) = tau(x)(1_M).
  EquivariantMap from_local_function(std::shared_ptr<ConfigurationSpace const> space,
                                     std::span<symbol_type const>              mu);

  /// All of CA(M, A), sorted lexicographically by graph. `cap` bounds |A^M|.
  std::vector<EquivariantMap> enumerate_ca(FiniteMonoid const& M,
                                           Alphabet            A,
                                           std::uint64_t       cap = default_enumeration_cap);

  /// outer ∘ inner.
  EquivariantMap compose(EquivariantMap const& outer, EquivariantMap const& inner);

  /// tau_m(x) = x ∘ L_m, i.e. tau_m(x)(m') = x(m m').
  EquivariantMap tau_m(FiniteMonoid const& M, Alphabet A, element_type m);
  EquivariantMap tau_m(std::shared_ptr<ConfigurationSpace const> space, element_type m);

  class LocalRule {
   public:
    LocalRule(std::size_t radius, Alphabet alphabet, std::vector<symbol_type> table);

    /// Binary radius-1 rule; bit k of `number` is the output on the window
    /// (left, center, right) = bits of k.
    static LocalRule wolfram(unsigned number);

    static LocalRule identity(Alphabet A);

    std::size_t radius() const noexcept {
      return _radius;
    }

    Alphabet alphabet() const noexcept {
      return _alphabet;
    }

    std::vector<symbol_type> const& table() const noexcept {
      return _table;
    }

    std::size_t window_length() const noexcept {
      return 2 * _radius + 1;
    }

    symbol_type operator()(std::size_t window) const noexcept {
      return _table[window];
    }

    /// Raw field equality; use rules_equal for equality of global maps.
    bool operator==(LocalRule const&) const = default;

   private:
    std::size_t              _radius;
    Alphabet                 _alphabet;
    std::vector<symbol_type> _table;
  };

  /// The same global map presented with a larger radius.
  LocalRule pad_to_radius(LocalRule const& rule, std::size_t radius);

  /// outer ∘ inner, of radius outer.radius() + inner.radius().
  LocalRule compose(LocalRule const& outer, LocalRule const& inner);

  PeriodicWord apply_rule(LocalRule const& rule, PeriodicWord const& y);

  /// Equality of the induced maps on A^Z. Throws Error(mismatch) if the
  /// alphabets differ.
  bool rules_equal(LocalRule const& r1, LocalRule const& r2);

  /// An element of the symmetric monoid Map(X) of a finite indexed set.
  class Transformation {
   public:
    explicit Transformation(std::vector<std::size_t> mapping);

    static Transformation identity(std::size_t n);

    std::size_t domain_size() const noexcept {
      return _mapping.size();
    }

    std::vector<std::size_t> const& mapping() const noexcept {
      return _mapping;
    }

    std::size_t operator()(std::size_t i) const noexcept {
      return _mapping[i];
    }

    bool operator==(Transformation const&) const = default;

   private:
    std::vector<std::size_t> _mapping;
  };

  /// outer ∘ inner.
  Transformation compose(Transformation const& outer, Transformation const& inner);

  /// mapping[i] = position of tau(X[i]) in X. Throws NotClosed.
  Transformation restrict_to(std::span<Configuration const> X, EquivariantMap const& tau);
  Transformation restrict_to(std::span<PeriodicWord const> X, LocalRule const& rule);

}  // namespace rfca

#endif  // RFCA_CELLULAR_HPP
