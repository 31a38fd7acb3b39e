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

#include "rfca/cellular.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rfca {

  ////////////////////////////////////////////////////////////////////////
  // EquivariantMap
  ////////////////////////////////////////////////////////////////////////

  bool is_equivariant(ConfigurationSpace const& space, std::span<std::size_t const> graph) {
    if (graph.size() != space.count()) {
      throw Error(ErrorKind::mismatch,
                  "graph has " + std::to_string(graph.size()) + " entries, expected "
                      + std::to_string(space.count()));
    }
    for (auto y : graph) {
      if (y >= space.count()) {
        throw Error(ErrorKind::index_out_of_range,
                    "graph entry " + std::to_string(y) + " is not a configuration index");
      }
    }
    for (element_type m = 0; m < space.monoid().size(); ++m) {
      for (std::size_t x = 0; x < space.count(); ++x) {
        if (graph[space.shift(m, x)] != space.shift(m, graph[x])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_equivariant(FiniteMonoid const& M, Alphabet A, std::span<std::size_t const> graph) {
    return is_equivariant(ConfigurationSpace(M, A), graph);
  }

  EquivariantMap::EquivariantMap(FiniteMonoid M, Alphabet A, std::vector<std::size_t> graph)
      : EquivariantMap(std::make_shared<ConfigurationSpace const>(std::move(M), A),
                       std::move(graph)) {}

  EquivariantMap::EquivariantMap(std::shared_ptr<ConfigurationSpace const> space,
                                 std::vector<std::size_t>                  graph)
      : _space(std::move(space)), _graph(std::move(graph)) {
    if (!is_equivariant(*_space, _graph)) {
      throw Error(ErrorKind::invalid_argument, "map does not commute with the shift");
    }
  }

  EquivariantMap EquivariantMap::identity(FiniteMonoid M, Alphabet A) {
    auto                     space = std::make_shared<ConfigurationSpace const>(std::move(M), A);
    std::vector<std::size_t> graph(space->count());
    std::iota(graph.begin(), graph.end(), 0);
    return EquivariantMap(std::move(space), std::move(graph));
  }

  Configuration EquivariantMap::operator()(Configuration const& x) const {
    return _space->configuration(_graph[_space->index_of(x)]);
  }

  EquivariantMap from_local_function(std::shared_ptr<ConfigurationSpace const> space,
                                     std::span<symbol_type const>              mu) {
    if (mu.size() != space->count()) {
      throw Error(ErrorKind::mismatch, "local function must be defined on every configuration");
    }
    std::size_t const        n = space->monoid().size();
    std::size_t const        a = space->alphabet().size();
    std::vector<std::size_t> graph(space->count());
    for (std::size_t x = 0; x < space->count(); ++x) {
      std::size_t index = 0;
      for (element_type mp = 0; mp < n; ++mp) {
        index = index * a + mu[space->shift(mp, x)];
      }
      graph[x] = index;
    }
    return EquivariantMap(std::move(space), std::move(graph));
  }

  std::vector<EquivariantMap> enumerate_ca(FiniteMonoid const& M, Alphabet A, std::uint64_t cap) {
    auto const space = std::make_shared<ConfigurationSpace const>(M, A, cap);
    std::uint64_t const total = checked_power(A.size(), space->count(), max_enumerated_maps);

    std::vector<EquivariantMap> out;
    out.reserve(total);
    std::vector<symbol_type> mu(space->count(), 0);
    for (std::uint64_t c = 0; c < total; ++c) {
      std::uint64_t rest = c;
      for (std::size_t i = mu.size(); i-- > 0;) {
        mu[i] = static_cast<symbol_type>(rest % A.size());
        rest /= A.size();
      }
      out.push_back(from_local_function(space, mu));
    }
    std::sort(out.begin(), out.end(), [](auto const& l, auto const& r) {
      return l.graph() < r.graph();
    });
    return out;
  }

  EquivariantMap compose(EquivariantMap const& outer, EquivariantMap const& inner) {
    if (!(outer.monoid() == inner.monoid()) || !(outer.alphabet() == inner.alphabet())) {
      throw Error(ErrorKind::mismatch, "automata act on different configuration spaces");
    }
    std::vector<std::size_t> graph(inner.graph().size());
    for (std::size_t x = 0; x < graph.size(); ++x) {
      graph[x] = outer(inner(x));
    }
    return EquivariantMap(inner.shared_space(), std::move(graph));
  }

  EquivariantMap tau_m(std::shared_ptr<ConfigurationSpace const> space, element_type m) {
    FiniteMonoid const& M = space->monoid();
    if (m >= M.size()) {
      throw Error(ErrorKind::index_out_of_range,
                  "element " + std::to_string(m) + " is not in the monoid");
    }
    std::vector<std::size_t> graph(space->count());
    std::vector<symbol_type> values(M.size());
    for (std::size_t x = 0; x < space->count(); ++x) {
      auto const xs = space->values_of(x);
      for (element_type mp = 0; mp < M.size(); ++mp) {
        values[mp] = xs[M.product(m, mp)];
      }
      graph[x] = space->index_of(values);
    }
    return EquivariantMap(std::move(space), std::move(graph));
  }

  EquivariantMap tau_m(FiniteMonoid const& M, Alphabet A, element_type m) {
    return tau_m(std::make_shared<ConfigurationSpace const>(M, A), m);
  }

  ////////////////////////////////////////////////////////////////////////
  // LocalRule
  ////////////////////////////////////////////////////////////////////////

  LocalRule::LocalRule(std::size_t radius, Alphabet alphabet, std::vector<symbol_type> table)
      : _radius(radius), _alphabet(alphabet), _table(std::move(table)) {
    std::uint64_t const expected
        = checked_power(_alphabet.size(), 2 * _radius + 1, default_enumeration_cap);
    if (_table.size() != expected) {
      throw Error(ErrorKind::invalid_argument,
                  "rule table has " + std::to_string(_table.size())
                      + " entries, expected " + std::to_string(expected));
    }
    for (auto s : _table) {
      if (s >= _alphabet.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "rule output " + std::to_string(s) + " is outside the alphabet");
      }
    }
  }

  LocalRule LocalRule::wolfram(unsigned number) {
    if (number > 255) {
      throw Error(ErrorKind::invalid_argument,
                  "Wolfram numbers range over 0..255, got " + std::to_string(number));
    }
    std::vector<symbol_type> table(8);
    for (unsigned k = 0; k < 8; ++k) {
      table[k] = (number >> k) & 1U;
    }
    return LocalRule(1, Alphabet(2), std::move(table));
  }

  LocalRule LocalRule::identity(Alphabet A) {
    std::vector<symbol_type> table(A.size());
    std::iota(table.begin(), table.end(), 0);
    return LocalRule(0, A, std::move(table));
  }

  LocalRule pad_to_radius(LocalRule const& rule, std::size_t radius) {
    if (radius < rule.radius()) {
      throw Error(ErrorKind::invalid_argument, "cannot pad a rule to a smaller radius");
    }
    std::size_t const a     = rule.alphabet().size();
    std::size_t const inner = rule.table().size();
    std::size_t const drop  = checked_power(a, radius - rule.radius(), default_enumeration_cap);
    std::size_t const total = checked_power(a, 2 * radius + 1, default_enumeration_cap);
    std::vector<symbol_type> table(total);
    for (std::size_t w = 0; w < total; ++w) {
      table[w] = rule((w / drop) % inner);
    }
    return LocalRule(radius, rule.alphabet(), std::move(table));
  }

  LocalRule compose(LocalRule const& outer, LocalRule const& inner) {
    if (!(outer.alphabet() == inner.alphabet())) {
      throw Error(ErrorKind::mismatch, "rules use different alphabets");
    }
    std::size_t const a      = outer.alphabet().size();
    std::size_t const radius = outer.radius() + inner.radius();
    std::size_t const length = 2 * radius + 1;
    std::size_t const total  = checked_power(a, length, default_enumeration_cap);

    std::vector<symbol_type> table(total);
    std::vector<symbol_type> window(length);
    for (std::size_t w = 0; w < total; ++w) {
      std::size_t rest = w;
      for (std::size_t i = length; i-- > 0;) {
        window[i] = static_cast<symbol_type>(rest % a);
        rest /= a;
      }
      // Intermediate symbols at offsets 0..2*outer.radius() of the window.
      std::size_t outer_window = 0;
      for (std::size_t j = 0; j < outer.window_length(); ++j) {
        std::size_t inner_window = 0;
        for (std::size_t i = 0; i < inner.window_length(); ++i) {
          inner_window = inner_window * a + window[j + i];
        }
        outer_window = outer_window * a + inner(inner_window);
      }
      table[w] = outer(outer_window);
    }
    return LocalRule(radius, outer.alphabet(), std::move(table));
  }

  PeriodicWord apply_rule(LocalRule const& rule, PeriodicWord const& y) {
    std::size_t const        a = rule.alphabet().size();
    auto const               r = static_cast<std::int64_t>(rule.radius());
    std::vector<symbol_type> out(y.period());
    for (std::size_t k = 0; k < out.size(); ++k) {
      auto const  center = static_cast<std::int64_t>(k);
      std::size_t window = 0;
      for (std::int64_t i = center - r; i <= center + r; ++i) {
        symbol_type const s = y.at(i);
        if (s >= a) {
          throw Error(ErrorKind::index_out_of_range,
                      "symbol " + std::to_string(s) + " is outside the rule's alphabet");
        }
        window = window * a + s;
      }
      out[k] = rule(window);
    }
    return PeriodicWord(std::move(out));
  }

  bool rules_equal(LocalRule const& r1, LocalRule const& r2) {
    if (!(r1.alphabet() == r2.alphabet())) {
      throw Error(ErrorKind::mismatch, "rules use different alphabets");
    }
    std::size_t const radius = std::max(r1.radius(), r2.radius());
    return pad_to_radius(r1, radius).table() == pad_to_radius(r2, radius).table();
  }

  ////////////////////////////////////////////////////////////////////////
  // Transformations
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<std::size_t> mapping) : _mapping(std::move(mapping)) {
    for (auto i : _mapping) {
      if (i >= _mapping.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "transformation entry " + std::to_string(i) + " is out of range");
      }
    }
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<std::size_t> mapping(n);
    std::iota(mapping.begin(), mapping.end(), 0);
    return Transformation(std::move(mapping));
  }

  Transformation compose(Transformation const& outer, Transformation const& inner) {
    if (outer.domain_size() != inner.domain_size()) {
      throw Error(ErrorKind::mismatch, "transformations act on sets of different sizes");
    }
    std::vector<std::size_t> mapping(inner.domain_size());
    for (std::size_t i = 0; i < mapping.size(); ++i) {
      mapping[i] = outer(inner(i));
    }
    return Transformation(std::move(mapping));
  }

  Transformation restrict_to(std::span<Configuration const> X, EquivariantMap const& tau) {
    ConfigurationSpace const& space = tau.space();
    constexpr auto            absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t>  position(space.count(), absent);
    for (std::size_t i = 0; i < X.size(); ++i) {
      position[space.index_of(X[i])] = i;
    }
    std::vector<std::size_t> mapping(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
      std::size_t const image = position[tau(space.index_of(X[i]))];
      if (image == absent) {
        throw NotClosed(i);
      }
      mapping[i] = image;
    }
    return Transformation(std::move(mapping));
  }

  Transformation restrict_to(std::span<PeriodicWord const> X, LocalRule const& rule) {
    std::vector<std::size_t> mapping(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
      PeriodicWord const image = apply_rule(rule, X[i]);
      auto const         it    = std::find(X.begin(), X.end(), image);
      if (it == X.end()) {
        throw NotClosed(i);
      }
      mapping[i] = static_cast<std::size_t>(it - X.begin());
    }
    return Transformation(std::move(mapping));
  }

}  // namespace rfca
